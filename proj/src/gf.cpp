// Copyright 2026 The plift Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plift/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace plift {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int t = 0;
  while (q % p == 0) {
    q /= p;
    ++t;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), t);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeField::PrimeField(int p) : p_(static_cast<Elem>(p)) {
  if (!is_prime(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

namespace {

template <class Base>
std::vector<Elem> poly_rem(const Base& base, std::vector<Elem> a,
                           std::span<const Elem> divisor) {
  const std::size_t d = divisor.size() - 1;
  const Elem lead_inv = base.inv(divisor[d]);
  while (a.size() > d) {
    const Elem c = base.mul(a.back(), lead_inv);
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - d;
      for (std::size_t j = 0; j <= d; ++j)
        a[shift + j] = base.sub(a[shift + j], base.mul(c, divisor[j]));
    }
    a.pop_back();
  }
  return a;
}

template <class Base>
bool poly_is_zero(std::span<const Elem> a) {
  return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

}  // namespace

template <class Base>
bool GaloisExtension<Base>::is_irreducible(const Base& base,
                                           std::span<const Elem> poly) {
  if (poly.size() < 2 || poly.back() == 0) return false;
  const int d = static_cast<int>(poly.size()) - 1;
  if (d == 1) return true;
  const Elem b = base.order();
  std::vector<Elem> poly_v(poly.begin(), poly.end());
  for (int deg = 1; deg <= d / 2; ++deg) {
    std::vector<Elem> divisor(deg + 1, 0);
    divisor[deg] = 1;
    // Counter over the lower coefficients.
    while (true) {
      if (poly_is_zero<Base>(poly_rem(base, poly_v, divisor))) return false;
      int i = 0;
      while (i < deg && ++divisor[i] == b) divisor[i++] = 0;
      if (i == deg) break;
    }
  }
  return true;
}

template <class Base>
std::vector<Elem> GaloisExtension<Base>::first_irreducible(const Base& base,
                                                           int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  const Elem b = base.order();
  std::vector<Elem> poly(degree + 1, 0);
  poly[degree] = 1;
  while (true) {
    if (is_irreducible(base, poly)) return poly;
    int i = 0;
    while (i < degree && ++poly[i] == b) poly[i++] = 0;
    if (i == degree)
      throw std::logic_error("no irreducible polynomial found");
  }
}

template <class Base>
GaloisExtension<Base>::GaloisExtension(BasePtr base, std::vector<Elem> modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2)
    throw std::invalid_argument("modulus must have degree >= 1");
  if (modulus_.back() != 1)
    throw std::invalid_argument("modulus must be monic");
  base_order_ = base_->order();
  for (Elem c : modulus_)
    if (c >= base_order_)
      throw std::invalid_argument("modulus coefficient out of range");
  degree_ = static_cast<int>(modulus_.size()) - 1;
  if (!is_irreducible(*base_, modulus_))
    throw std::invalid_argument("modulus is reducible");

  std::uint64_t order = 1;
  for (int i = 0; i < degree_; ++i) {
    order *= base_order_;
    if (order > (1u << 22))
      throw std::invalid_argument("field too large for table arithmetic");
  }
  order_ = static_cast<Elem>(order);
  xor_add_ = base_->characteristic() == 2;

  if (!xor_add_ && order_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    neg_table_.resize(order_);
    for (Elem a = 0; a < order_; ++a) {
      neg_table_[a] = digitwise(0, a, true);
      for (Elem b = 0; b < order_; ++b)
        add_table_[a * order_ + b] = digitwise(a, b, false);
    }
  }

  const std::uint64_t group = order_ - 1;
  const auto factors = prime_factors(static_cast<std::int64_t>(group));
  bool found = false;
  for (Elem c = 1; c < order_ && !found; ++c) {
    bool full = true;
    for (auto r : factors) {
      if (slow_pow(c, group / static_cast<std::uint64_t>(r)) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      primitive_ = c;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("modulus does not define a field");

  exp_.assign(2 * group, 0);
  log_.assign(order_, -1);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = x;
    exp_[i + group] = x;
    log_[x] = static_cast<int>(i);
    x = slow_mul(x, primitive_);
  }

  if (order_ <= 256) {
    mul_table_.assign(static_cast<std::size_t>(order_) * order_, 0);
    for (Elem a = 1; a < order_; ++a)
      for (Elem b = 1; b < order_; ++b)
        mul_table_[a * order_ + b] = exp_[log_[a] + log_[b]];
  }
}

template <class Base>
Elem GaloisExtension<Base>::digitwise(Elem a, Elem b, bool subtract) const {
  Elem result = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    const Elem da = a % base_order_, db = b % base_order_;
    a /= base_order_;
    b /= base_order_;
    result += scale * (subtract ? base_->sub(da, db) : base_->add(da, db));
    scale *= base_order_;
  }
  return result;
}

template <class Base>
Elem GaloisExtension<Base>::slow_mul(Elem a, Elem b) const {
  const auto ca = coordinates(a), cb = coordinates(b);
  std::vector<Elem> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < degree_; ++j)
      prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
  }
  return from_coordinates(poly_rem(*base_, std::move(prod), modulus_));
}

template <class Base>
Elem GaloisExtension<Base>::slow_pow(Elem a, std::uint64_t n) const {
  Elem result = 1;
  while (n) {
    if (n & 1) result = slow_mul(result, a);
    a = slow_mul(a, a);
    n >>= 1;
  }
  return result;
}

template <class Base>
Elem GaloisExtension<Base>::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero");
  const int group = static_cast<int>(order_ - 1);
  return exp_[(group - log_[a]) % group];
}

template <class Base>
Elem GaloisExtension<Base>::pow(Elem a, std::int64_t n) const {
  if (a == 0) {
    if (n == 0) return 1;
    if (n > 0) return 0;
    throw std::domain_error("negative power of zero");
  }
  const std::int64_t group = order_ - 1;
  std::int64_t e = (static_cast<std::int64_t>(log_[a]) * (n % group)) % group;
  if (e < 0) e += group;
  return exp_[e];
}

template <class Base>
Elem GaloisExtension<Base>::exp(std::int64_t n) const {
  const std::int64_t group = order_ - 1;
  n %= group;
  if (n < 0) n += group;
  return exp_[n];
}

template <class Base>
std::vector<Elem> GaloisExtension<Base>::coordinates(Elem a) const {
  std::vector<Elem> out(degree_);
  for (int i = 0; i < degree_; ++i) {
    out[i] = a % base_order_;
    a /= base_order_;
  }
  return out;
}

template <class Base>
Elem GaloisExtension<Base>::from_coordinates(
    std::span<const Elem> coords) const {
  if (coords.size() > static_cast<std::size_t>(degree_))
    throw std::invalid_argument("too many coordinates");
  Elem result = 0, scale = 1;
  for (Elem c : coords) {
    if (c >= base_order_) throw std::invalid_argument("coordinate out of range");
    result += c * scale;
    scale *= base_order_;
  }
  return result;
}

template class GaloisExtension<PrimeField>;

namespace {

// Conway polynomials, little-endian.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  return table;
}

std::vector<Elem> resolve_modulus(int p, int t,
                                  const std::optional<std::vector<int>>& given) {
  if (!is_prime(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  if (t < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::vector<int> coeffs = given ? *given : default_modulus(p, t);
  if (static_cast<int>(coeffs.size()) != t + 1)
    throw std::invalid_argument("modulus must have degree " +
                                std::to_string(t));
  std::vector<Elem> out;
  out.reserve(coeffs.size());
  for (int c : coeffs) {
    if (c < 0 || c >= p)
      throw std::invalid_argument("modulus coefficient out of range");
    out.push_back(static_cast<Elem>(c));
  }
  return out;
}

}  // namespace

std::vector<int> default_modulus(int p, int t) {
  const auto& table = modulus_table();
  if (auto it = table.find({p, t}); it != table.end()) return it->second;
  PrimeField prime(p);
  auto poly = GaloisExtension<PrimeField>::first_irreducible(prime, t);
  return {poly.begin(), poly.end()};
}

FiniteField::FiniteField(int p, int t, std::optional<std::vector<int>> modulus)
    : GaloisExtension<PrimeField>(std::make_shared<const PrimeField>(p),
                                  resolve_modulus(p, t, modulus)) {}

Elem FiniteField::from_int(std::int64_t n) const {
  const std::int64_t p = prime();
  n %= p;
  if (n < 0) n += p;
  return static_cast<Elem>(n);
}

std::string FiniteField::format(Elem a) const {
  if (degree() == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  const auto c = coordinates(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << ']';
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Elem FiniteField::parse(std::string_view text) const {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty field element");
  if (text.front() != '[') {
    const auto v = parse_int(text);
    if (v < 0 || v >= static_cast<std::int64_t>(order()))
      throw std::invalid_argument("element index out of range");
    return static_cast<Elem>(v);
  }
  if (text.back() != ']')
    throw std::invalid_argument("malformed field element '" +
                                std::string(text) + "'");
  text = text.substr(1, text.size() - 2);
  std::vector<Elem> coords;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const auto v = parse_int(text.substr(0, comma));
    if (v < 0 || v >= prime())
      throw std::invalid_argument("coefficient out of range");
    coords.push_back(static_cast<Elem>(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return from_coordinates(coords);
}

template class GaloisExtension<FiniteField>;

FieldPtr make_field(int p, int t, std::optional<std::vector<int>> modulus) {
  return std::make_shared<const FiniteField>(p, t, std::move(modulus));
}

FieldPtr make_field(std::int64_t q) {
  const auto pt = prime_power(q);
  if (!pt)
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pt->first, pt->second);
}

FieldElement::FieldElement(FieldPtr field, Elem value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("null field");
  if (value_ >= field_->order())
    throw std::invalid_argument("element index out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const {
  return {field_, field_->neg(value_)};
}
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t n) const {
  return {field_, field_->pow(value_, n)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

ExtensionIso::ExtensionIso(FieldPtr base, int m) : base_(std::move(base)), m_(m) {
  if (m < 1) throw std::invalid_argument("extension dimension must be >= 1");
  ext_ = std::make_shared<const ExtensionField>(
      base_, ExtensionField::first_irreducible(*base_, m));
}

}  // namespace plift
