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

#include "frobsq/finite_field.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "frobsq/errors.hpp"
#include "frobsq/numeric.hpp"

namespace frobsq {
namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of f modulo the monic polynomial d, both lowest degree first.
Poly poly_mod(Poly f, const Poly& d, std::uint64_t p) {
  const std::size_t dd = d.size() - 1;
  while (f.size() > dd) {
    const std::uint64_t lead = f.back() % p;
    const std::size_t shift = f.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t j = 0; j < dd; ++j) {
        f[shift + j] = static_cast<std::uint32_t>((f[shift + j] + (p - lead) * d[j]) % p);
      }
    }
    f.pop_back();
  }
  return f;
}

bool all_zero(const Poly& f) {
  for (auto c : f) {
    if (c != 0) return false;
  }
  return true;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
Poly monic_from_index(std::uint64_t index, unsigned degree, std::uint64_t p) {
  Poly f(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[degree] = 1;
  return f;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FieldContext>>& cache() {
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FieldContext>> c;
  return c;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> f, std::uint64_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  const Poly fp(f.begin(), f.end());
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (all_zero(poly_mod(fp, monic_from_index(i, d, p), p))) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, unsigned b) {
  if (b == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, b);
  for (std::uint64_t i = 0; i < count; ++i) {
    Poly f = monic_from_index(i, b, p);
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(b) +
                           " over Z_" + std::to_string(p));
}

// ---------------------------------------------------------------- element

std::span<const std::uint32_t> FieldElement::coefficients() const {
  return {c_.data(), ctx_ ? ctx_->degree() : 0};
}

bool FieldElement::is_zero() const {
  for (auto c : c_) {
    if (c != 0) return false;
  }
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  if (!ctx_) throw DomainError("arithmetic on a detached field element");
  return ctx_->add(*this, rhs);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  if (!ctx_) throw DomainError("arithmetic on a detached field element");
  return ctx_->sub(*this, rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  if (!ctx_) throw DomainError("arithmetic on a detached field element");
  return ctx_->mul(*this, rhs);
}

FieldElement FieldElement::operator-() const {
  if (!ctx_) throw DomainError("arithmetic on a detached field element");
  return ctx_->neg(*this);
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.ctx_ != y.ctx_) {
    if (!x.ctx_ || !y.ctx_ || !x.ctx_->same_field(*y.ctx_)) return false;
  }
  return x.c_ == y.c_;
}

// ---------------------------------------------------------------- context

FieldContext::FieldContext(std::uint64_t p, unsigned b, std::vector<std::uint32_t> modulus)
    : p_(p), b_(b), q_(checked_pow(p, b)), modulus_(std::move(modulus)) {}

std::shared_ptr<const FieldContext> FieldContext::make(std::uint64_t p, unsigned b,
                                                       std::uint64_t size_guard) {
  if (b == 0) throw DomainError("field degree must be >= 1");
  if (p > kTrialDivisionLimit || !is_prime(p)) {
    throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (b > kMaxFieldDegree) {
    throw ResourceError("field degree " + std::to_string(b) + " exceeds " +
                        std::to_string(kMaxFieldDegree));
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < b; ++i) {
    q *= p;
    if (q > size_guard) {
      throw ResourceError("field " + std::to_string(p) + "^" + std::to_string(b) +
                          " exceeds size guard " + std::to_string(size_guard));
    }
  }

  const std::lock_guard lock(cache_mutex());
  auto& slot = cache()[{p, b}];
  if (!slot) slot = std::make_shared<const FieldContext>(p, b, smallest_irreducible(p, b));
  return slot;
}

bool FieldContext::same_field(const FieldContext& other) const {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

void FieldContext::require_member(const FieldElement& x) const {
  if (x.ctx_ != this && (!x.ctx_ || !same_field(*x.ctx_))) {
    throw DomainError("field element belongs to a different field than GF(" +
                      std::to_string(p_) + "^" + std::to_string(b_) + ")");
  }
}

FieldElement FieldContext::blank() const {
  FieldElement x;
  x.ctx_ = this;
  return x;
}

FieldElement FieldContext::zero() const { return blank(); }

FieldElement FieldContext::one() const {
  FieldElement x = blank();
  x.c_[0] = 1;
  return x;
}

FieldElement FieldContext::generator() const {
  FieldElement x = blank();
  if (b_ > 1) x.c_[1] = 1;
  // b == 1: t is a root of the modulus x, i.e. zero.
  return x;
}

FieldElement FieldContext::from_int(std::int64_t value) const {
  FieldElement x = blank();
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  x.c_[0] = static_cast<std::uint32_t>(r);
  return x;
}

FieldElement FieldContext::from_coefficients(std::span<const std::int64_t> coefficients) const {
  if (coefficients.size() > b_) throw DomainError("too many coefficients for field element");
  FieldElement x = blank();
  const auto p = static_cast<std::int64_t>(p_);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::int64_t r = coefficients[i] % p;
    if (r < 0) r += p;
    x.c_[i] = static_cast<std::uint32_t>(r);
  }
  return x;
}

FieldElement FieldContext::element_at(std::uint64_t index) const {
  if (index >= q_) throw DomainError("element index out of range");
  FieldElement x = blank();
  for (unsigned i = 0; i < b_; ++i) {
    x.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return x;
}

std::uint64_t FieldContext::index_of(const FieldElement& x) const {
  require_member(x);
  std::uint64_t index = 0;
  for (unsigned i = b_; i-- > 0;) index = index * p_ + x.c_[i];
  return index;
}

FieldElement FieldContext::add(const FieldElement& x, const FieldElement& y) const {
  require_member(x);
  require_member(y);
  FieldElement r = blank();
  for (unsigned i = 0; i < b_; ++i) {
    const std::uint64_t s = std::uint64_t{x.c_[i]} + y.c_[i];
    r.c_[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElement FieldContext::sub(const FieldElement& x, const FieldElement& y) const {
  require_member(x);
  require_member(y);
  FieldElement r = blank();
  for (unsigned i = 0; i < b_; ++i) {
    const std::uint64_t s = std::uint64_t{x.c_[i]} + p_ - y.c_[i];
    r.c_[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

FieldElement FieldContext::neg(const FieldElement& x) const {
  require_member(x);
  FieldElement r = blank();
  for (unsigned i = 0; i < b_; ++i) {
    r.c_[i] = x.c_[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - x.c_[i]);
  }
  return r;
}

FieldElement FieldContext::mul(const FieldElement& x, const FieldElement& y) const {
  require_member(x);
  require_member(y);
  // p < 2^20, so a product is < 2^40 and the accumulators below stay far
  // from overflow for degree <= 20.
  std::array<std::uint64_t, 2 * kMaxFieldDegree> acc{};
  for (unsigned i = 0; i < b_; ++i) {
    if (x.c_[i] == 0) continue;
    for (unsigned j = 0; j < b_; ++j) acc[i + j] += std::uint64_t{x.c_[i]} * y.c_[j];
  }
  for (unsigned k = 0; k < 2 * b_ - 1; ++k) acc[k] %= p_;
  // x^b == -(m_0 + m_1 x + ... + m_{b-1} x^{b-1}).
  for (unsigned k = 2 * b_ - 1; k-- > b_;) {
    const std::uint64_t lead = acc[k] % p_;
    if (lead == 0) continue;
    const std::uint64_t neg_lead = p_ - lead;
    const unsigned shift = k - b_;
    for (unsigned j = 0; j < b_; ++j) {
      acc[shift + j] = (acc[shift + j] + neg_lead * modulus_[j]) % p_;
    }
  }
  FieldElement r = blank();
  for (unsigned i = 0; i < b_; ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p_);
  return r;
}

FieldElement FieldContext::pow(const FieldElement& x, std::uint64_t exponent) const {
  require_member(x);
  FieldElement result = one();
  FieldElement base = x;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) base = mul(base, base);
  }
  return result;
}

FieldElement FieldContext::inv(const FieldElement& x) const {
  require_member(x);
  if (x.is_zero()) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  return pow(x, q_ - 2);
}

std::string FieldContext::render(const FieldElement& x) const {
  require_member(x);
  if (b_ == 1) return std::to_string(x.c_[0]);
  std::string out = std::to_string(x.c_[0]);
  for (unsigned i = 1; i < b_; ++i) {
    out += '+';
    out += std::to_string(x.c_[i]);
    out += "*t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string FieldContext::render_modulus() const {
  std::string out;
  for (unsigned i = b_ + 1; i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FieldContext::ElementIterator::ElementIterator(const FieldContext* ctx, std::uint64_t index)
    : ctx_(ctx), index_(index), current_(ctx->blank()) {
  if (index < ctx->order()) current_ = ctx->element_at(index);
}

FieldContext::ElementIterator& FieldContext::ElementIterator::operator++() {
  ++index_;
  const std::uint64_t p = ctx_->characteristic();
  for (unsigned i = 0; i < ctx_->degree(); ++i) {
    if (++current_.c_[i] < p) break;
    current_.c_[i] = 0;
  }
  return *this;
}

FieldContext::ElementRange FieldContext::elements() const {
  return {ElementIterator(this, 0), ElementIterator(this, q_)};
}

// -------------------------------------------------------------- embedding

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FieldContext> small,
                               std::shared_ptr<const FieldContext> big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_->characteristic() != big_->characteristic()) {
    throw DomainError("cannot embed fields of different characteristic");
  }
  if (big_->degree() % small_->degree() != 0) {
    throw DomainError("cannot embed GF(" + std::to_string(small_->order()) + ") into GF(" +
                      std::to_string(big_->order()) + "): " + std::to_string(small_->degree()) +
                      " does not divide " + std::to_string(big_->degree()));
  }
  const auto modulus = small_->modulus();
  bool found = false;
  for (const FieldElement& g : big_->elements()) {
    // Horner evaluation of the small field's modulus at g.
    FieldElement value = big_->zero();
    for (std::size_t i = modulus.size(); i-- > 0;) {
      value = big_->add(big_->mul(value, g), big_->from_int(modulus[i]));
    }
    if (value.is_zero()) {
      image_of_generator_ = g;
      found = true;
      break;
    }
  }
  if (!found) throw InvariantViolation("no root of the small field modulus in the big field");

  FieldElement power = big_->one();
  for (unsigned i = 0; i < small_->degree(); ++i) {
    powers_.push_back(power);
    power = big_->mul(power, image_of_generator_);
  }
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
  if (!x.context() || !small_->same_field(*x.context())) {
    throw DomainError("embedding applied to an element of another field");
  }
  const auto coefficients = x.coefficients();
  FieldElement image = big_->zero();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    image = big_->add(image, big_->mul(big_->from_int(coefficients[i]), powers_[i]));
  }
  return image;
}

FieldEmbedding embed_field(std::shared_ptr<const FieldContext> small,
                           std::shared_ptr<const FieldContext> big) {
  return FieldEmbedding(std::move(small), std::move(big));
}

}  // namespace frobsq
