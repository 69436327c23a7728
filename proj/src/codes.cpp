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


#include "plift/codes.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace plift {

std::string to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::kRS: return "RS";
    case CodeKind::kPRS: return "PRS";
    case CodeKind::kRM: return "RM";
    case CodeKind::kPRM: return "PRM";
    case CodeKind::kLift: return "Lift";
    case CodeKind::kPLift: return "PLift";
  }
  return "?";
}

CodeKind parse_code_kind(std::string_view name) {
  std::string lower(name);
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
  if (lower == "rs") return CodeKind::kRS;
  if (lower == "prs") return CodeKind::kPRS;
  if (lower == "rm") return CodeKind::kRM;
  if (lower == "prm") return CodeKind::kPRM;
  if (lower == "lift") return CodeKind::kLift;
  if (lower == "plift") return CodeKind::kPLift;
  throw std::invalid_argument("unknown code kind '" + std::string(name) + "'");
}

bool is_projective(CodeKind kind) {
  return kind == CodeKind::kPRS || kind == CodeKind::kPRM ||
         kind == CodeKind::kPLift;
}

bool code_equal(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.support->arity() != b.support->arity())
    return false;
  return row_space_equal(a.field(), a.generator, b.generator);
}

bool code_contains(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) return false;
  return a.row_space().contains_all(b.generator);
}

Matrix evaluate_monomials(const FiniteField& F,
                          const std::vector<Degree>& degrees,
                          const std::vector<Point>& points) {
  int maxdeg = 0;
  for (const auto& d : degrees)
    for (int e : d) maxdeg = std::max(maxdeg, e);
  const Elem q = F.order();
  // pw[x * (maxdeg + 1) + e] = x^e with 0^0 = 1.
  std::vector<Elem> pw(static_cast<std::size_t>(q) * (maxdeg + 1));
  for (Elem x = 0; x < q; ++x) {
    Elem r = 1;
    for (int e = 0; e <= maxdeg; ++e) {
      pw[x * (maxdeg + 1) + e] = r;
      r = F.mul(r, x);
    }
  }
  Matrix G(degrees.size(), points.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const auto& d = degrees[i];
    auto row = G.row(i);
    for (std::size_t j = 0; j < points.size(); ++j) {
      const auto& x = points[j];
      Elem r = 1;
      for (std::size_t c = 0; c < d.size() && r != 0; ++c)
        r = F.mul(r, pw[x[c] * (maxdeg + 1) + d[c]]);
      row[j] = r;
    }
  }
  return G;
}

MonomialCode::MonomialCode(CodeKind kind, FieldPtr field, int m, int k)
    : kind_(kind), field_(std::move(field)), m_(m), k_(k) {
  const int q = static_cast<int>(field_->order());
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if ((kind == CodeKind::kRS || kind == CodeKind::kPRS) && m != 1)
    throw std::invalid_argument(to_string(kind) + " codes require m = 1");
  switch (kind) {
    case CodeKind::kRS: degrees_ = rs_degrees(k, q); break;
    case CodeKind::kPRS: degrees_ = prs_degrees(k, q); break;
    case CodeKind::kRM: degrees_ = rm_degrees(m, k, q); break;
    case CodeKind::kPRM: degrees_ = prm_degrees(m, k, q); break;
    case CodeKind::kLift: degrees_ = adeg(m, k, q); break;
    case CodeKind::kPLift: degrees_ = pdeg(m, k, q); break;
  }
  support_ = std::make_shared<const Support>(
      field_, m, is_projective(kind) ? Space::kProjective : Space::kAffine);
  code_.support = support_;
  code_.generator = evaluate_monomials(*field_, degrees_.tuples, support_->points());
}

CodeDescriptor MonomialCode::descriptor() const {
  CodeDescriptor d{kind_, q(), m_, k_, std::nullopt, dim(), length()};
  if (is_projective(kind_)) d.v = degrees_.v;
  return d;
}

std::vector<Elem> MonomialCode::encode(std::span<const Elem> msg) const {
  if (msg.size() != dim())
    throw std::invalid_argument("message length " + std::to_string(msg.size()) +
                                " differs from dimension " + std::to_string(dim()));
  for (Elem x : msg)
    if (x >= field_->order()) throw std::invalid_argument("symbol out of range");
  return vec_mul(*field_, msg, code_.generator);
}

std::vector<Elem> restrict_to_line(const Support& pm, std::span<const Elem> c,
                                   const LineEmbedding& L, int v) {
  const FiniteField& F = pm.field();
  const auto img = L.image(pm);
  const auto w = L.weight_vector(v);
  std::vector<Elem> out(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) out[i] = F.div(c[img[i]], w[i]);
  return out;
}

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

void require_projective(const MonomialCode& c) {
  if (!is_projective(c.kind()))
    throw std::invalid_argument("code must live on projective space");
}

}  // namespace

LinearCode shorten_at_infinity(const MonomialCode& c) {
  require_projective(c);
  const FiniteField& F = c.field();
  const std::size_t affine = ipow(F.order(), c.m());
  const Matrix& G = c.generator();
  const auto at_inf = G.select_columns(range(affine, c.length()));
  // Messages u with u * G_inf = 0.
  const Matrix U = nullspace(F, at_inf.transpose());
  LinearCode out;
  out.support = std::make_shared<const Support>(c.field_ptr(), c.m(), Space::kAffine);
  out.generator = U.rows() ? multiply(F, U, G.select_columns(range(0, affine)))
                           : Matrix(0, affine);
  return out;
}

LinearCode puncture_to_infinity(const MonomialCode& c) {
  require_projective(c);
  if (c.m() < 2) throw std::invalid_argument("puncturing requires m >= 2");
  const std::size_t affine = ipow(c.field().order(), c.m());
  LinearCode out;
  out.support =
      std::make_shared<const Support>(c.field_ptr(), c.m() - 1, Space::kProjective);
  out.generator = c.generator().select_columns(range(affine, c.length()));
  return out;
}

std::vector<Elem> apply_projective_action(const Support& pm, const Matrix& M,
                                          std::span<const Elem> c, int v) {
  const FiniteField& F = pm.field();
  if (M.rows() != static_cast<std::size_t>(pm.arity()) || M.cols() != M.rows())
    throw std::invalid_argument("action matrix has wrong shape");
  if (!inverse(F, M)) throw std::invalid_argument("action matrix is singular");
  std::vector<Elem> out(pm.size());
  for (std::size_t i = 0; i < pm.size(); ++i) {
    const auto y = mul_vec(F, M, pm.point(i));
    const auto [p, lambda] = standardize(F, y);
    out[i] = F.mul(F.pow(lambda, -static_cast<std::int64_t>(v)), c[pm.index_of(p)]);
  }
  return out;
}

std::vector<Elem> apply_affine_action(const Support& am, const Matrix& A,
                                      std::span<const Elem> b,
                                      std::span<const Elem> c) {
  const FiniteField& F = am.field();
  if (A.rows() != static_cast<std::size_t>(am.arity()) || A.cols() != A.rows() ||
      b.size() != A.rows())
    throw std::invalid_argument("affine map has wrong shape");
  if (!inverse(F, A)) throw std::invalid_argument("affine map is singular");
  std::vector<Elem> out(am.size());
  for (std::size_t i = 0; i < am.size(); ++i) {
    auto y = mul_vec(F, A, am.point(i));
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = F.add(y[j], b[j]);
    out[i] = c[am.index_of(y)];
  }
  return out;
}

Matrix random_invertible(const FiniteField& F, std::size_t n, Rng& rng) {
  while (true) {
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        M.at(i, j) = static_cast<Elem>(uniform_below(rng, F.order()));
    if (rank(F, M) == n) return M;
  }
}

}  // namespace plift
