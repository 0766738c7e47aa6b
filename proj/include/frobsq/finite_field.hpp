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

#ifndef FROBSQ_FINITE_FIELD_HPP_
#define FROBSQ_FINITE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frobsq {

inline constexpr unsigned kMaxFieldDegree = 20;
inline constexpr std::uint64_t kDefaultFieldSizeGuard = std::uint64_t{1} << 20;

class FieldContext;

/// An element of F_{p^b}: a polynomial in the generator t of degree < b with
/// coefficients in [0, p). Holds a non-owning pointer to its context, so the
/// context must outlive the element.
class FieldElement {
 public:
  FieldElement() = default;

  const FieldContext* context() const { return ctx_; }
  std::span<const std::uint32_t> coefficients() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Same field and same coefficients.
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  friend class FieldContext;

  const FieldContext* ctx_ = nullptr;
  std::array<std::uint32_t, kMaxFieldDegree> c_{};
};

/// F_{p^b} = Z_p[t] / (modulus). The modulus is the smallest monic
/// irreducible polynomial of degree b, where polynomials are ordered by the
/// integer sum c_i p^i of their lower coefficients. For b = 1 the modulus
/// is x and elements are plain residues.
///
/// Elements are enumerated in the same order: index sum c_i p^i.
class FieldContext {
 public:
  /// Shared, cached per (p, b). Throws DomainError if p is not prime or
  /// b == 0, ResourceError if p^b exceeds size_guard or b > kMaxFieldDegree.
  static std::shared_ptr<const FieldContext> make(std::uint64_t p, unsigned b,
                                                  std::uint64_t size_guard = kDefaultFieldSizeGuard);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return b_; }
  std::uint64_t order() const { return q_; }

  /// Monic, lowest degree first, length degree() + 1.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  /// Same prime and same modulus, whether or not the same object.
  bool same_field(const FieldContext& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of t (the image of x in Z_p[x]/(modulus)).
  FieldElement generator() const;
  FieldElement from_int(std::int64_t value) const;
  /// Coefficients lowest degree first; reduced mod p. At most degree() of them.
  FieldElement from_coefficients(std::span<const std::int64_t> coefficients) const;

  /// Element with enumeration index i in [0, order()).
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  /// Throws DivisionByZero for x == 0.
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, std::uint64_t exponent) const;

  /// "c0+c1*t+c2*t^2+..." (all b coefficients); just "c0" when b == 1.
  std::string render(const FieldElement& x) const;
  /// e.g. "x^3+x+1".
  std::string render_modulus() const;

  class ElementIterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;

    ElementIterator() = default;
    const FieldElement& operator*() const { return current_; }
    const FieldElement* operator->() const { return &current_; }
    ElementIterator& operator++();
    ElementIterator operator++(int) {
      ElementIterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const ElementIterator& x, const ElementIterator& y) {
      return x.index_ == y.index_;
    }

   private:
    friend class FieldContext;
    ElementIterator(const FieldContext* ctx, std::uint64_t index);

    const FieldContext* ctx_ = nullptr;
    std::uint64_t index_ = 0;
    FieldElement current_;
  };

  struct ElementRange {
    ElementIterator first;
    ElementIterator last;
    ElementIterator begin() const { return first; }
    ElementIterator end() const { return last; }
  };

  /// All order() elements in index order, starting at 0.
  ElementRange elements() const;

  FieldContext(std::uint64_t p, unsigned b, std::vector<std::uint32_t> modulus);

 private:
  void require_member(const FieldElement& x) const;
  FieldElement blank() const;

  std::uint64_t p_;
  unsigned b_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Lowest-degree-first monic irreducible polynomial of degree b over Z_p, the
/// first in the enumeration order described on FieldContext.
std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned b);

/// True iff no monic polynomial of degree 1..deg/2 divides f (f monic).
bool is_irreducible(std::span<const std::uint32_t> f, std::uint64_t p);

/// A field homomorphism F_{p^b} -> F_{p^B}, b | B, determined by the image of
/// the small field's generator: the first element of the big field (in
/// enumeration order) that is a root of the small field's modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(std::shared_ptr<const FieldContext> small, std::shared_ptr<const FieldContext> big);

  const FieldContext& small() const { return *small_; }
  const FieldContext& big() const { return *big_; }
  const FieldElement& generator_image() const { return image_of_generator_; }

  FieldElement operator()(const FieldElement& x) const;

 private:
  std::shared_ptr<const FieldContext> small_;
  std::shared_ptr<const FieldContext> big_;
  FieldElement image_of_generator_;
  std::vector<FieldElement> powers_;  // g^0 .. g^(b-1)
};

/// Throws DomainError when the characteristics differ or the degree of
/// small does not divide the degree of big.
FieldEmbedding embed_field(std::shared_ptr<const FieldContext> small,
                           std::shared_ptr<const FieldContext> big);

}  // namespace frobsq

#endif  // FROBSQ_FINITE_FIELD_HPP_
