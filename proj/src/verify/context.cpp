#include "quermass/verify/context.hpp"

#include <bit>
#include <type_traits>
#include <variant>

#include "quermass/quermass/quermass.hpp"
#include "quermass/verify/constants.hpp"

namespace quermass {

namespace {

std::uint64_t hash_double(std::uint64_t h, double x) {
  return hash_combine(h, std::bit_cast<std::uint64_t>(x == 0.0 ? 0.0 : x));
}

std::uint64_t hash_mat(std::uint64_t h, const Mat& m) {
  h = hash_combine(h, static_cast<std::uint64_t>(m.rows()));
  h = hash_combine(h, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.size(); ++i) h = hash_double(h, m.data()[i]);
  return h;
}

}  // namespace

std::uint64_t body_fingerprint(const ConvexBody& k) {
  std::uint64_t h = hash_combine(static_cast<std::uint64_t>(k.rep().index()), static_cast<std::uint64_t>(k.dim()));
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Ball>) {
          h = hash_mat(h, r.center);
          h = hash_double(h, r.radius);
        } else if constexpr (std::is_same_v<T, Box>) {
          h = hash_mat(hash_mat(h, r.center), r.halfwidths);
        } else if constexpr (std::is_same_v<T, Ellipsoid>) {
          h = hash_mat(hash_mat(h, r.center), r.shape);
        } else if constexpr (std::is_same_v<T, VPolytope>) {
          h = hash_mat(h, r.vertices);
        } else {
          h = hash_mat(hash_mat(h, r.normals), r.offsets);
        }
      },
      k.rep());
  return h;
}

VerifyContext::VerifyContext(std::uint64_t seed, Budgets budgets) : seed_(seed), budgets_(budgets) {}

Estimate VerifyContext::cached(const Key& key, const std::function<Estimate(const SeededRng&)>& compute) {
  std::promise<Estimate> promise;
  std::shared_future<Estimate> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      future = promise.get_future().share();
      cache_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    std::uint64_t stream = hash_combine(static_cast<std::uint64_t>(std::get<0>(key)), std::get<1>(key));
    stream = hash_combine(stream, static_cast<std::uint64_t>(std::get<2>(key)));
    stream = hash_combine(stream, static_cast<std::uint64_t>(std::get<3>(key)));
    try {
      promise.set_value(compute(SeededRng{seed_, stream}));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

Estimate VerifyContext::dpp(int d, int q, bool include_origin) {
  return cached(Key{1, include_origin ? 1u : 0u, d, q}, [&](const SeededRng& rng) {
    return dpp_constant(d, q, include_origin, Budget::fixed(budgets_.constants), rng);
  });
}

Estimate VerifyContext::bp_moment(int n, int s) {
  return cached(Key{2, 0, n, s},
                [&](const SeededRng& rng) { return quermass::bp_moment(n, s, Budget::fixed(budgets_.constants), rng); });
}

Estimate VerifyContext::reference_quermass(const ConvexBody& k, int j) {
  if (auto exact = quermass_exact(k, j)) return Estimate::exact(*exact);
  return cached(Key{3, body_fingerprint(k), k.dim(), j}, [&](const SeededRng& rng) {
    return quermass_auto(k, j, Budget::fixed(budgets_.reference), rng);
  });
}

}  // namespace quermass
