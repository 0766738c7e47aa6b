/* Copyright 2026 The frobsq Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "frobsq/curves.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include "frobsq/errors.hpp"
#include "frobsq/numeric.hpp"

namespace frobsq {
namespace {

void require_field(const FieldContext& field, const FieldElement& x) {
  if (!x.context() || !field.same_field(*x.context())) {
    throw DomainError("curve coefficient belongs to a different field");
  }
}

void require_nonsingular(const WeierstrassCurve& curve) {
  if (!is_nonsingular(curve)) {
    throw DomainError("singular curve " + curve.render() + " (discriminant is zero)");
  }
}

// Finding the generator image scans the big field, so keep the result.
std::shared_ptr<const FieldEmbedding> cached_embedding(std::shared_ptr<const FieldContext> small,
                                                       std::shared_ptr<const FieldContext> big) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, unsigned>,
                  std::shared_ptr<const FieldEmbedding>>
      cache;
  const std::tuple key{small->characteristic(), small->degree(), big->degree()};
  {
    const std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto embedding = std::make_shared<const FieldEmbedding>(embed_field(small, big));
  const std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(embedding)).first->second;
}

}  // namespace

WeierstrassCurve WeierstrassCurve::make(std::shared_ptr<const FieldContext> field, FieldElement a1,
                                        FieldElement a2, FieldElement a3, FieldElement a4,
                                        FieldElement a6) {
  if (!field) throw DomainError("curve without a field");
  for (const FieldElement* c : {&a1, &a2, &a3, &a4, &a6}) require_field(*field, *c);
  return WeierstrassCurve{std::move(field), a1, a2, a3, a4, a6};
}

WeierstrassCurve WeierstrassCurve::short_form(std::shared_ptr<const FieldContext> field,
                                              FieldElement a, FieldElement b) {
  if (!field) throw DomainError("curve without a field");
  const FieldElement zero = field->zero();
  return make(std::move(field), zero, zero, zero, a, b);
}

std::string WeierstrassCurve::render() const {
  std::string out = "[";
  const FieldElement* coefficients[] = {&a1, &a2, &a3, &a4, &a6};
  for (std::size_t i = 0; i < 5; ++i) {
    if (i != 0) out += ',';
    out += field->render(*coefficients[i]);
  }
  out += "] over GF(" + std::to_string(field->characteristic()) + "^" +
         std::to_string(field->degree()) + ") mod " + field->render_modulus();
  return out;
}

bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y) {
  return x.field->same_field(*y.field) && x.a1 == y.a1 && x.a2 == y.a2 && x.a3 == y.a3 &&
         x.a4 == y.a4 && x.a6 == y.a6;
}

FieldElement discriminant(const WeierstrassCurve& curve) {
  const FieldContext& f = *curve.field;
  for (const FieldElement* c : {&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6}) {
    require_field(f, *c);
  }
  const auto k = [&f](std::int64_t v) { return f.from_int(v); };
  const FieldElement& a1 = curve.a1;
  const FieldElement& a2 = curve.a2;
  const FieldElement& a3 = curve.a3;
  const FieldElement& a4 = curve.a4;
  const FieldElement& a6 = curve.a6;

  const FieldElement b2 = a1 * a1 + k(4) * a2;
  const FieldElement b4 = k(2) * a4 + a1 * a3;
  const FieldElement b6 = a3 * a3 + k(4) * a6;
  const FieldElement b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

bool is_nonsingular(const WeierstrassCurve& curve) { return !discriminant(curve).is_zero(); }

CurveCount count_points_naive(const WeierstrassCurve& curve, std::uint64_t guard) {
  const FieldContext& f = *curve.field;
  if (f.order() > guard) {
    throw ResourceError("naive count over GF(" + std::to_string(f.order()) +
                        ") exceeds guard " + std::to_string(guard));
  }
  require_nonsingular(curve);
  std::uint64_t points = 1;
  for (const FieldElement& x : f.elements()) {
    const FieldElement rhs = ((x + curve.a2) * x + curve.a4) * x + curve.a6;
    for (const FieldElement& y : f.elements()) {
      const FieldElement lhs = y * y + curve.a1 * x * y + curve.a3 * y;
      if (lhs == rhs) ++points;
    }
  }
  const auto trace = static_cast<std::int64_t>(f.order() + 1) - static_cast<std::int64_t>(points);
  return CurveCount{curve, points, trace};
}

// ----------------------------------------------------------- PointCounter

PointCounter::PointCounter(std::shared_ptr<const FieldContext> field) : field_(std::move(field)) {
  const FieldContext& f = *field_;
  const std::uint64_t q = f.order();
  square_roots_.assign(q, 0);
  for (const FieldElement& w : f.elements()) ++square_roots_[f.index_of(w * w)];

  if (f.characteristic() == 2) {
    artin_schreier_.assign(q, 0);
    for (const FieldElement& z : f.elements()) ++artin_schreier_[f.index_of(z * z + z)];
    inverse_.assign(q, 0);
    std::vector<bool> done(q, false);
    for (const FieldElement& v : f.elements()) {
      const std::uint64_t i = f.index_of(v);
      if (i == 0 || done[i]) continue;
      const std::uint64_t j = f.index_of(f.inv(v));
      inverse_[i] = static_cast<std::uint32_t>(j);
      inverse_[j] = static_cast<std::uint32_t>(i);
      done[i] = done[j] = true;
    }
  } else {
    quarter_ = f.inv(f.from_int(4));
  }
}

std::shared_ptr<const PointCounter> PointCounter::for_field(
    std::shared_ptr<const FieldContext> field) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const PointCounter>> cache;
  const std::pair key{field->characteristic(), field->degree()};
  {
    const std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->field().same_field(*field)) return it->second;
  }
  auto counter = std::make_shared<const PointCounter>(field);
  const std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, counter);
  return it->second;
}

std::uint64_t PointCounter::count(const WeierstrassCurve& curve) const {
  const FieldContext& f = *field_;
  if (!f.same_field(*curve.field)) throw DomainError("curve is over a different field");
  require_nonsingular(curve);

  std::uint64_t points = 1;
  const bool even = f.characteristic() == 2;
  for (const FieldElement& x : f.elements()) {
    const FieldElement linear = curve.a1 * x + curve.a3;
    const FieldElement rhs = ((x + curve.a2) * x + curve.a4) * x + curve.a6;
    if (!even) {
      // (y + L/2)^2 = R + L^2/4
      points += square_roots_[f.index_of(rhs + linear * linear * quarter_)];
    } else if (linear.is_zero()) {
      points += square_roots_[f.index_of(rhs)];
    } else {
      // y = L z turns y^2 + L y = R into z^2 + z = R / L^2
      const FieldElement inv = f.element_at(inverse_[f.index_of(linear)]);
      points += artin_schreier_[f.index_of(rhs * inv * inv)];
    }
  }
  return points;
}

std::uint64_t count_points(const WeierstrassCurve& curve) {
  return PointCounter::for_field(curve.field)->count(curve);
}

// ------------------------------------------------------------ realization

void for_each_reduced_curve(std::shared_ptr<const FieldContext> field,
                            const std::function<bool(const WeierstrassCurve&)>& visit) {
  const FieldContext& f = *field;
  const FieldElement zero = f.zero();
  const FieldElement one = f.one();
  const auto offer = [&](const WeierstrassCurve& c) { return !is_nonsingular(c) || visit(c); };

  if (f.characteristic() > 3) {
    for (const FieldElement& a : f.elements()) {
      for (const FieldElement& b : f.elements()) {
        if (!offer(WeierstrassCurve::short_form(field, a, b))) return;
      }
    }
    return;
  }
  if (f.characteristic() == 3) {
    for (const FieldElement& a2 : f.elements()) {
      for (const FieldElement& a4 : f.elements()) {
        for (const FieldElement& a6 : f.elements()) {
          if (!offer(WeierstrassCurve::make(field, zero, a2, zero, a4, a6))) return;
        }
      }
    }
    return;
  }
  for (const FieldElement& a2 : f.elements()) {
    for (const FieldElement& a6 : f.elements()) {
      if (!offer(WeierstrassCurve::make(field, one, a2, zero, zero, a6))) return;
    }
  }
  for (const FieldElement& a3 : f.elements()) {
    for (const FieldElement& a4 : f.elements()) {
      for (const FieldElement& a6 : f.elements()) {
        if (!offer(WeierstrassCurve::make(field, zero, zero, a3, a4, a6))) return;
      }
    }
  }
}

std::optional<WeierstrassCurve> realize_trace(const PrimePower& q, std::int64_t a) {
  if (!within_hasse(q.q(), a)) {
    throw DomainError("trace " + std::to_string(a) + " violates the Hasse bound for q = " +
                      std::to_string(q.q()));
  }
  auto field = FieldContext::make(q.p(), q.b());
  const auto counter = PointCounter::for_field(field);
  const auto target = static_cast<std::uint64_t>(static_cast<std::int64_t>(q.q()) + 1 - a);
  std::optional<WeierstrassCurve> found;
  for_each_reduced_curve(field, [&](const WeierstrassCurve& c) {
    if (counter->count(c) != target) return true;
    found = c;
    return false;
  });
  return found;
}

WeierstrassCurve base_change(const WeierstrassCurve& curve, unsigned n, std::uint64_t guard) {
  if (n == 0) throw DomainError("extension degree must be >= 1");
  const FieldContext& small = *curve.field;
  std::uint64_t extension_order = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (extension_order > guard / small.order()) {
      throw ResourceError("GF(" + std::to_string(small.order()) + "^" + std::to_string(n) +
                          ") exceeds base-change guard " + std::to_string(guard));
    }
    extension_order *= small.order();
  }
  if (n == 1) return curve;
  auto big = FieldContext::make(small.characteristic(), small.degree() * n,
                                std::max(guard, kDefaultFieldSizeGuard));
  const auto embedding = cached_embedding(curve.field, big);
  const FieldEmbedding& embed = *embedding;
  return WeierstrassCurve::make(big, embed(curve.a1), embed(curve.a2), embed(curve.a3),
                                embed(curve.a4), embed(curve.a6));
}

std::uint64_t base_change_count(const WeierstrassCurve& curve, unsigned n, std::uint64_t guard) {
  return count_points(base_change(curve, n, guard));
}

}  // namespace frobsq
