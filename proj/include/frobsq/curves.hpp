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

#ifndef FROBSQ_CURVES_HPP_
#define FROBSQ_CURVES_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobsq/finite_field.hpp"
#include "frobsq/traces.hpp"

namespace frobsq {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over one field. The curve
/// keeps its field context alive.
struct WeierstrassCurve {
  std::shared_ptr<const FieldContext> field;
  FieldElement a1, a2, a3, a4, a6;

  /// Throws DomainError if a coefficient belongs to another field.
  static WeierstrassCurve make(std::shared_ptr<const FieldContext> field, FieldElement a1,
                               FieldElement a2, FieldElement a3, FieldElement a4, FieldElement a6);
  /// y^2 = x^3 + A x + B.
  static WeierstrassCurve short_form(std::shared_ptr<const FieldContext> field, FieldElement a,
                                     FieldElement b);

  /// "[a1,a2,a3,a4,a6] over GF(p^b) mod <modulus>".
  std::string render() const;

  friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y);
};

/// -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6.
FieldElement discriminant(const WeierstrassCurve& curve);
bool is_nonsingular(const WeierstrassCurve& curve);

struct CurveCount {
  WeierstrassCurve curve;
  std::uint64_t points = 0;  // including the point at infinity
  std::int64_t trace = 0;    // q + 1 - points
};

/// Full (x, y) iteration is quadratic in q; this caps it.
inline constexpr std::uint64_t kNaiveCountGuard = std::uint64_t{1} << 12;
inline constexpr std::uint64_t kBaseChangeGuard = std::uint64_t{1} << 16;

/// Literal count: 1 + #{(x, y) in F_q^2 on the affine curve}.
/// Throws DomainError for a singular curve, ResourceError above guard.
CurveCount count_points_naive(const WeierstrassCurve& curve,
                              std::uint64_t guard = kNaiveCountGuard);

/// Counts the same set as count_points_naive, one x at a time: for each x
/// the number of y with y^2 + L y = R is read from a per-field table of how
/// often each value is hit by w^2 (odd p, after w = y + L/2) or by z^2 + z
/// (p = 2, L != 0, after y = L z). Linear in q.
class PointCounter {
 public:
  /// Cached per field.
  static std::shared_ptr<const PointCounter> for_field(std::shared_ptr<const FieldContext> field);

  explicit PointCounter(std::shared_ptr<const FieldContext> field);

  const FieldContext& field() const { return *field_; }

  /// Throws DomainError for a singular curve or a curve over another field.
  std::uint64_t count(const WeierstrassCurve& curve) const;

 private:
  std::shared_ptr<const FieldContext> field_;
  std::vector<std::uint8_t> square_roots_;   // #{w : w^2 = v}
  std::vector<std::uint8_t> artin_schreier_;  // #{z : z^2 + z = v}, p = 2 only
  std::vector<std::uint32_t> inverse_;        // index of v^-1, p = 2 only
  FieldElement quarter_;                      // 1/4, odd p only
};

/// Point count through the cached PointCounter of the curve's field.
std::uint64_t count_points(const WeierstrassCurve& curve);

/// Visits the reduced families used for trace realization, in their fixed
/// order, skipping singular members. Stops when visit returns false.
///  p > 3: y^2 = x^3 + A x + B, (A, B) lexicographic.
///  p = 3: y^2 = x^3 + a2 x^2 + a4 x + a6, (a2, a4, a6) lexicographic.
///  p = 2: y^2 + xy = x^3 + a2 x^2 + a6 over (a2, a6), then
///         y^2 + a3 y = x^3 + a4 x + a6 over (a3, a4, a6).
void for_each_reduced_curve(std::shared_ptr<const FieldContext> field,
                            const std::function<bool(const WeierstrassCurve&)>& visit);

/// First curve in the reduced enumeration over F_q with trace a, or nullopt.
/// Throws DomainError outside the Hasse interval.
std::optional<WeierstrassCurve> realize_trace(const PrimePower& q, std::int64_t a);

/// The same curve over F_{q^n}, coefficients mapped through embed_field.
WeierstrassCurve base_change(const WeierstrassCurve& curve, unsigned n,
                             std::uint64_t guard = kBaseChangeGuard);

/// #E(F_{q^n}). Throws ResourceError when q^n exceeds guard.
std::uint64_t base_change_count(const WeierstrassCurve& curve, unsigned n,
                                std::uint64_t guard = kBaseChangeGuard);

}  // namespace frobsq

#endif  // FROBSQ_CURVES_HPP_
