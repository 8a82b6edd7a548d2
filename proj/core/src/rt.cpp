#include "g3enum/rt.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "g3enum/errors.hpp"
#include "g3enum/gw_core.hpp"

namespace g3enum {

namespace {

void check_query(const RTQuery& q) {
  if (q.genus < 0 || q.genus > 3) throw DomainError("rt: genus must be 0..3");
  if (q.degree < 1) throw DomainError("rt: degree must be positive");
  if (q.free_points < 0) throw DomainError("rt: negative free point count");
  for (const int c : q.fixed_classes) {
    if (c < 0 || c > 2) throw DomainError("rt: fixed class codimension must be 0..2");
  }
  if (2 * q.genus + static_cast<int>(q.fixed_classes.size()) < 3) {
    throw DomainError("rt: unstable fixed domain (need 2g + k >= 3)");
  }
}

int balanced_free_points(int genus, int degree) { return 3 * degree + 2 * (1 - genus); }

class Caterpillar {
 public:
  Caterpillar(Session& session, std::span<const int> fixed)
      : session_(session), fixed_(fixed), last_(static_cast<int>(fixed.size()) - 3) {}

  ExactScalar evaluate(int d, int points) { return chain(0, d, points, -1); }

 private:
  ExactScalar chain(int component, int degree, int points, int incoming) {
    const std::size_t k = fixed_.size();
    if (component == last_) {
      const int codims[3] = {incoming, fixed_[k - 2], fixed_[k - 1]};
      return genus0_primary(session_, degree, codims, points);
    }
    const auto key = std::make_tuple(component, degree, points, incoming);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<int> codims;
    if (component == 0) {
      codims = {fixed_[0], fixed_[1], 0};
    } else {
      codims = {incoming, fixed_[static_cast<std::size_t>(component) + 1], 0};
    }
    ExactScalar total = 0;
    for (int here = 0; here <= degree; ++here) {
      for (int n = 0; n <= points; ++n) {
        for (int node = 0; node <= 2; ++node) {
          codims.back() = node;
          const ExactScalar local = genus0_primary(session_, here, codims, n);
          if (local.is_zero()) continue;
          total += binomial(points, n) * local *
                   chain(component + 1, degree - here, points - n, 2 - node);
        }
      }
    }
    memo_.emplace(key, total);
    return total;
  }

  Session& session_;
  std::span<const int> fixed_;
  int last_;
  std::map<std::tuple<int, int, int, int>, ExactScalar> memo_;
};

// All expansions of the handles into fixed pairs, appended after `fixed`.
template <typename Visit>
void for_each_handle_expansion(std::vector<int> fixed, int genus, Visit&& visit) {
  if (genus == 0) {
    visit(fixed);
    return;
  }
  for (int e = 0; e <= 2; ++e) {
    auto next = fixed;
    next.push_back(e);
    next.push_back(2 - e);
    for_each_handle_expansion(std::move(next), genus - 1, visit);
  }
}

}  // namespace

bool dimension_balanced(const RTQuery& q) {
  int total = q.free_points;
  for (const int c : q.fixed_classes) total += c;
  return total == balanced_free_points(q.genus, q.degree);
}

ExactScalar rigid0(Session& session, int d, std::span<const int> fixed_classes, int free_points) {
  if (fixed_classes.size() < 3) throw DomainError("rigid0: need at least three fixed points");
  if (d < 0 || free_points < 0) return 0;
  if (fixed_classes.size() == 3) return genus0_primary(session, d, fixed_classes, free_points);
  return Caterpillar(session, fixed_classes).evaluate(d, free_points);
}

ExactScalar rt(Session& session, const RTQuery& q) {
  check_query(q);
  if (q.fixed_classes.empty() && q.free_points == balanced_free_points(q.genus, q.degree)) {
    if (auto v = session.rt_overrides().find(q.genus, q.degree)) return *v;
  }
  if (!dimension_balanced(q)) return 0;

  auto sorted = q.fixed_classes;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::int64_t> params{q.genus, q.degree, q.free_points};
  params.insert(params.end(), sorted.begin(), sorted.end());

  return session.memo().get_or_compute(InvariantKey(KeyKind::Rt, std::move(params)), [&] {
    if (q.genus == 0) return rigid0(session, q.degree, q.fixed_classes, q.free_points);
    ExactScalar total = 0;
    for (int e = 0; e <= 2; ++e) {
      RTQuery lower{q.genus - 1, q.degree, q.fixed_classes, q.free_points};
      lower.fixed_classes.push_back(e);
      lower.fixed_classes.push_back(2 - e);
      total += rt(session, lower);
    }
    return total;
  });
}

ExactScalar rt_arranged(Session& session, const RTQuery& q, std::span<const std::size_t> order) {
  check_query(q);
  const std::size_t k = q.fixed_classes.size() + 2 * static_cast<std::size_t>(q.genus);
  std::vector<bool> seen(k, false);
  if (order.size() != k) throw DomainError("rt_arranged: order has the wrong length");
  for (const auto p : order) {
    if (p >= k || seen[p]) throw DomainError("rt_arranged: order is not a permutation");
    seen[p] = true;
  }
  if (!dimension_balanced(q)) return 0;

  ExactScalar total = 0;
  for_each_handle_expansion(q.fixed_classes, q.genus, [&](const std::vector<int>& expanded) {
    std::vector<int> arranged(k);
    for (std::size_t p = 0; p < k; ++p) arranged[p] = expanded[order[p]];
    total += rigid0(session, q.degree, arranged, q.free_points);
  });
  return total;
}

}  // namespace g3enum
