#include "parageo/algebra/graded_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace parageo {

// ---------------------------------------------------------------- CatalogId

CatalogId CatalogId::parse(const std::string& text) {
  CatalogId id;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  const auto open = s.find('(');
  if (open == std::string::npos) {
    id.family = s;
    return id;
  }
  if (s.back() != ')') throw Error(ErrorCode::UnknownCatalogName, "malformed catalog name '" + text + "'");
  id.family = s.substr(0, open);
  std::stringstream body(s.substr(open + 1, s.size() - open - 2));
  std::string item;
  while (std::getline(body, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      id.params.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParams, "non-integer parameter in '" + text + "'");
    }
  }
  return id;
}

std::string CatalogId::str() const {
  if (params.empty()) return family;
  std::string out = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

// ------------------------------------------------------------ GradedAlgebra

GradedAlgebra::GradedAlgebra(std::string name, FieldTag field, std::vector<int> weights, bool unimodular,
                             std::vector<BasisEntry> basis, std::vector<ScalarMatrix> g0_samples)
    : name_(std::move(name)),
      field_(field),
      weights_(std::move(weights)),
      unimodular_(unimodular),
      basis_(std::move(basis)),
      g0_samples_(std::move(g0_samples)) {
  std::stable_sort(basis_.begin(), basis_.end(),
                   [](const BasisEntry& a, const BasisEntry& b) { return a.grade < b.grade; });
  for (const auto& e : basis_) depth_ = std::max(depth_, std::abs(e.grade));
  const std::size_t n = matrix_dim();

  sparse_basis_.resize(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    const ScalarMatrix& m = basis_[a].matrix;
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, name_ + ": basis shape");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (m(r, c).is_zero()) continue;
        if (field_ == FieldTag::Rational && !m(r, c).is_real())
          throw Error(ErrorCode::NotInAlgebra, name_ + ": complex entry in a rational realization");
        if (entry_grade(r, c) != basis_[a].grade)
          throw Error(ErrorCode::NotInAlgebra, name_ + ": basis element " + basis_[a].label + " is not homogeneous");
        sparse_basis_[a].emplace_back(r, c, m(r, c));
      }
  }

  // Pivot entries: choose positions on which the basis is linearly independent.
  ScalarMatrix flat(dim(), n * n);
  for (std::size_t a = 0; a < dim(); ++a)
    for (const auto& [r, c, s] : sparse_basis_[a]) flat(a, r * n + c) = s;
  const RowEchelon e = rref(flat);
  if (e.pivots.size() != dim()) throw Error(ErrorCode::NotInAlgebra, name_ + ": basis is linearly dependent");
  ScalarMatrix square(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    pivots_.emplace_back(e.pivots[j] / n, e.pivots[j] % n);
    for (std::size_t a = 0; a < dim(); ++a) square(j, a) = flat(a, e.pivots[j]);
  }
  pivot_inverse_ = inverse(square);

  table_.resize(dim() * dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) {
      const ScalarMatrix comm = commutator(basis_[a].matrix, basis_[b].matrix);
      const AlgElem z = from_matrix(comm);
      for (std::size_t c = 0; c < dim(); ++c)
        if (!z.coord(c).is_zero()) table_[a * dim() + b].emplace_back(c, z.coord(c));
    }

  for (const auto& g : g0_samples_) {
    if (!in_g0_pattern(g)) throw Error(ErrorCode::NotInGroup, name_ + ": G0 sample is not block diagonal");
    (void)GroupElem::from_matrix(*this, g);
  }
}

std::size_t GradedAlgebra::grade_begin(int grade) const {
  std::size_t i = 0;
  while (i < dim() && basis_[i].grade < grade) ++i;
  return i;
}

std::size_t GradedAlgebra::grade_end(int grade) const {
  std::size_t i = grade_begin(grade);
  while (i < dim() && basis_[i].grade == grade) ++i;
  return i;
}

std::size_t GradedAlgebra::index_of(const std::string& label) const {
  for (std::size_t a = 0; a < dim(); ++a)
    if (basis_[a].label == label) return a;
  throw Error(ErrorCode::NotInAlgebra, name_ + " has no basis element " + label);
}

AlgElem GradedAlgebra::zero() const { return AlgElem(this, Vector(dim())); }

AlgElem GradedAlgebra::basis_elem(std::size_t index) const {
  Vector v(dim());
  v.at(index) = Scalar(1);
  return AlgElem(this, std::move(v));
}

AlgElem GradedAlgebra::element(Vector coords) const { return AlgElem(this, std::move(coords)); }

AlgElem GradedAlgebra::grade_element(int grade, const Vector& coords) const {
  const std::size_t b = grade_begin(grade);
  if (coords.size() != grade_end(grade) - b)
    throw Error(ErrorCode::DimensionMismatch, "grade " + std::to_string(grade) + " expects " +
                                                  std::to_string(grade_end(grade) - b) + " coordinates");
  Vector v(dim());
  std::copy(coords.begin(), coords.end(), v.begin() + static_cast<std::ptrdiff_t>(b));
  return AlgElem(this, std::move(v));
}

AlgElem GradedAlgebra::n_element(const Vector& coords) const {
  if (coords.size() != n_dim()) throw Error(ErrorCode::DimensionMismatch, "n coordinates");
  Vector v(dim());
  std::copy(coords.begin(), coords.end(), v.begin());
  return AlgElem(this, std::move(v));
}

AlgElem GradedAlgebra::pplus_element(const Vector& coords) const {
  if (coords.size() != pplus_dim()) throw Error(ErrorCode::DimensionMismatch, "p+ coordinates");
  Vector v(dim());
  std::copy(coords.begin(), coords.end(), v.begin() + static_cast<std::ptrdiff_t>(grade_end(0)));
  return AlgElem(this, std::move(v));
}

ScalarMatrix GradedAlgebra::to_matrix(const Vector& coords) const { return assemble(coords); }

AlgElem GradedAlgebra::from_matrix(const ScalarMatrix& m) const {
  if (m.rows() != matrix_dim() || m.cols() != matrix_dim())
    throw Error(ErrorCode::DimensionMismatch, "matrix does not match the realization size");
  Vector coords = extract(m);
  for (const auto& c : coords)
    if (!c.is_real()) throw Error(ErrorCode::NotInAlgebra, "matrix is not in the real form " + name_);
  if (assemble(coords) != m) throw Error(ErrorCode::NotInAlgebra, "matrix is not in " + name_);
  return AlgElem(this, std::move(coords));
}

bool GradedAlgebra::in_parabolic_pattern(const ScalarMatrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (entry_grade(r, c) < 0 && !m(r, c).is_zero()) return false;
  return true;
}

bool GradedAlgebra::in_parabolic_pattern(const PolyMatrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (entry_grade(r, c) < 0 && !m(r, c).is_zero()) return false;
  return true;
}

bool GradedAlgebra::in_g0_pattern(const ScalarMatrix& m) const {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (entry_grade(r, c) != 0 && !m(r, c).is_zero()) return false;
  return true;
}

std::vector<std::string> GradedAlgebra::validate() const {
  std::vector<std::string> problems;
  const std::size_t d = dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const int target = grade_of(a) + grade_of(b);
      for (const auto& [c, coef] : structure(a, b)) {
        if (grade_of(c) != target)
          problems.push_back("[" + label(a) + "," + label(b) + "] leaves grade " + std::to_string(target));
        if (!coef.is_real()) problems.push_back("[" + label(a) + "," + label(b) + "] has a complex constant");
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        const AlgElem x = basis_elem(a), y = basis_elem(b), z = basis_elem(c);
        const AlgElem j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!j.is_zero()) problems.push_back("Jacobi fails on " + label(a) + "," + label(b) + "," + label(c));
      }
  for (std::size_t a = 0; a < d; ++a)
    if (grade_of(a) != 0 && !nilpotency_index(basis_[a].matrix))
      problems.push_back(label(a) + " is not nilpotent");
  for (const auto& g : g0_samples_) {
    const GroupElem ge = GroupElem::from_matrix(*this, g);
    for (std::size_t a = 0; a < d; ++a)
      if (!Ad(ge, basis_elem(a)).in_grade(grade_of(a)))
        problems.push_back("a G0 sample moves " + label(a) + " out of its grade");
  }
  return problems;
}

// ------------------------------------------------------------------ catalog

namespace {

ScalarMatrix unit(std::size_t n, std::size_t r, std::size_t c, Scalar v = Scalar(1)) {
  ScalarMatrix m(n, n);
  m(r, c) = std::move(v);
  return m;
}

std::string entry_label(const char* prefix, std::size_t r, std::size_t c) {
  return std::string(prefix) + std::to_string(r + 1) + std::to_string(c + 1);
}

/// sl(N) graded by integer row weights: E_rc has grade w[c]-w[r], the Cartan
/// part spanned by E_ii - E_{i+1,i+1}.
std::vector<GradedAlgebra::BasisEntry> sl_basis(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<GradedAlgebra::BasisEntry> basis;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) basis.push_back({entry_label("E", r, c), w[c] - w[r], unit(n, r, c)});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ScalarMatrix h(n, n);
    h(i, i) = Scalar(1);
    h(i + 1, i + 1) = Scalar(-1);
    basis.push_back({"H" + std::to_string(i + 1), 0, h});
  }
  return basis;
}

/// Block-diagonal det-1 samples for a weight pattern: two diagonal scalings
/// and a unipotent inside every block of size at least two.
std::vector<ScalarMatrix> sl_g0_samples(const std::vector<int>& w) {
  const std::size_t n = w.size();
  std::vector<ScalarMatrix> out;
  ScalarMatrix d = ScalarMatrix::identity(n);
  d(0, 0) = Scalar(2);
  d(n - 1, n - 1) = Scalar::fraction(1, 2);
  out.push_back(d);
  ScalarMatrix e = ScalarMatrix::identity(n);
  e(0, 0) = Scalar::fraction(-3, 2);
  e(n - 1, n - 1) = Scalar::fraction(-2, 3);
  out.push_back(e);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && w[r] == w[c]) {
        ScalarMatrix u = ScalarMatrix::identity(n);
        u(r, c) = Scalar(r < c ? 1 : -2);
        out.push_back(u);
      }
  return out;
}

AlgebraPtr build_sl(const std::string& name, const std::vector<int>& w) {
  return std::make_shared<GradedAlgebra>(name, FieldTag::Rational, w, true, sl_basis(w), sl_g0_samples(w));
}

/// o(p+1,q+1) in the block form with rows (1, p+q, 1): g_{-1} holds the
/// column X and row -X^t J, g_1 the row Z and column -J Z^t, g_0 the scaling
/// diag(1,0,...,0,-1) and o(p,q) = {J(E_ij - E_ji)}.
AlgebraPtr build_conf(const std::string& name, int p, int q) {
  const std::size_t m = static_cast<std::size_t>(p + q);
  const std::size_t n = m + 2;
  std::vector<int> jsig(m);
  for (std::size_t r = 0; r < m; ++r) jsig[r] = r < static_cast<std::size_t>(p) ? 1 : -1;
  std::vector<int> w(n, 1);
  w[0] = 0;
  w[n - 1] = 2;
  std::vector<GradedAlgebra::BasisEntry> basis;
  for (std::size_t r = 0; r < m; ++r) {
    ScalarMatrix x(n, n);
    x(1 + r, 0) = Scalar(1);
    x(n - 1, 1 + r) = Scalar(-jsig[r]);
    basis.push_back({"X" + std::to_string(r + 1), -1, x});
  }
  {
    ScalarMatrix a(n, n);
    a(0, 0) = Scalar(1);
    a(n - 1, n - 1) = Scalar(-1);
    basis.push_back({"E", 0, a});
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ScalarMatrix a(n, n);
      a(1 + i, 1 + j) = Scalar(jsig[i]);
      a(1 + j, 1 + i) = Scalar(-jsig[j]);
      basis.push_back({"A" + std::to_string(i + 1) + std::to_string(j + 1), 0, a});
    }
  for (std::size_t r = 0; r < m; ++r) {
    ScalarMatrix z(n, n);
    z(0, 1 + r) = Scalar(1);
    z(1 + r, n - 1) = Scalar(-jsig[r]);
    basis.push_back({"Z" + std::to_string(r + 1), 1, z});
  }

  std::vector<ScalarMatrix> samples;
  ScalarMatrix d = ScalarMatrix::identity(n);
  d(0, 0) = Scalar(2);
  d(n - 1, n - 1) = Scalar::fraction(1, 2);
  samples.push_back(d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ScalarMatrix g = ScalarMatrix::identity(n);
      if (jsig[i] == jsig[j]) {
        g(1 + i, 1 + i) = Scalar::fraction(3, 5);
        g(1 + i, 1 + j) = Scalar::fraction(-4, 5);
        g(1 + j, 1 + i) = Scalar::fraction(4, 5);
        g(1 + j, 1 + j) = Scalar::fraction(3, 5);
      } else {
        g(1 + i, 1 + i) = Scalar::fraction(5, 4);
        g(1 + i, 1 + j) = Scalar::fraction(3, 4);
        g(1 + j, 1 + i) = Scalar::fraction(3, 4);
        g(1 + j, 1 + j) = Scalar::fraction(5, 4);
      }
      samples.push_back(g);
    }
  return std::make_shared<GradedAlgebra>(name, FieldTag::Rational, w, false, basis, samples);
}

/// su(2,1) preserving the Hermitian form with antidiagonal matrix, with a
/// real basis whose structure constants are rational.
AlgebraPtr build_su21() {
  const Scalar i = Scalar::i();
  auto m = [](std::initializer_list<std::tuple<int, int, Scalar>> entries) {
    ScalarMatrix x(3, 3);
    for (const auto& [r, c, v] : entries) x(r, c) = v;
    return x;
  };
  std::vector<GradedAlgebra::BasisEntry> basis{
      {"iE31", -2, m({{2, 0, i}})},
      {"E21-E32", -1, m({{1, 0, 1}, {2, 1, -1}})},
      {"iE21+iE32", -1, m({{1, 0, i}, {2, 1, i}})},
      {"diag(1,0,-1)", 0, m({{0, 0, 1}, {2, 2, -1}})},
      {"diag(i,-2i,i)", 0, m({{0, 0, i}, {1, 1, Scalar(0, -2)}, {2, 2, i}})},
      {"E12-E23", 1, m({{0, 1, 1}, {1, 2, -1}})},
      {"iE12+iE23", 1, m({{0, 1, i}, {1, 2, i}})},
      {"iE13", 2, m({{0, 2, i}})},
  };
  std::vector<ScalarMatrix> samples{
      m({{0, 0, 2}, {1, 1, 1}, {2, 2, Scalar::fraction(1, 2)}}),
      m({{0, 0, Scalar(1, 1)}, {1, 1, Scalar(0, -1)}, {2, 2, Scalar(mpq_class(1, 2), mpq_class(1, 2))}}),
  };
  return std::make_shared<GradedAlgebra>("su21", FieldTag::Gaussian, std::vector<int>{0, 1, 2}, true, basis,
                                         samples);
}

AlgebraPtr build(const CatalogId& id) {
  const auto& p = id.params;
  auto want = [&](std::size_t count) {
    if (p.size() != count)
      throw Error(ErrorCode::BadParams, id.family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (id.family == "proj") {
    want(1);
    if (p[0] < 1) throw Error(ErrorCode::BadParams, "proj(m) needs m >= 1");
    std::vector<int> w(static_cast<std::size_t>(p[0]) + 1, 1);
    w[0] = 0;
    return build_sl(id.str(), w);
  }
  if (id.family == "grass") {
    want(2);
    if (p[0] < 1 || p[1] < 1) throw Error(ErrorCode::BadParams, "grass(n,m) needs n, m >= 1");
    std::vector<int> w(static_cast<std::size_t>(p[0] + p[1]), 1);
    std::fill(w.begin(), w.begin() + p[0], 0);
    return build_sl(id.str(), w);
  }
  if (id.family == "conf") {
    want(2);
    if (p[0] < 0 || p[1] < 0 || p[0] + p[1] < 2) throw Error(ErrorCode::BadParams, "conf(p,q) needs p + q >= 2");
    return build_conf(id.str(), p[0], p[1]);
  }
  if (id.family == "lagr3") {
    want(0);
    return build_sl("lagr3", {0, 1, 2});
  }
  if (id.family == "xxdot") {
    want(0);
    return build_sl("xxdot", {0, 1, 2, 2});
  }
  if (id.family == "su21") {
    want(0);
    return build_su21();
  }
  throw Error(ErrorCode::UnknownCatalogName, "unknown algebra '" + id.str() + "'");
}

}  // namespace

AlgebraPtr make_algebra(const CatalogId& id) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr> cache;
  const std::string key = id.str();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AlgebraPtr built = build(id);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

AlgebraPtr make_algebra(const std::string& name) { return make_algebra(CatalogId::parse(name)); }

// ------------------------------------------------------------------ AlgElem

AlgElem::AlgElem(const GradedAlgebra* algebra, Vector coords) : algebra_(algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra_->dim())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(algebra_->dim()) + " coordinates");
  for (const auto& c : coords_)
    if (!c.is_real()) throw Error(ErrorCode::NotInAlgebra, "coordinates of a real Lie algebra must be rational");
}

Vector AlgElem::grade_coords(int grade) const {
  return Vector(coords_.begin() + static_cast<std::ptrdiff_t>(algebra_->grade_begin(grade)),
                coords_.begin() + static_cast<std::ptrdiff_t>(algebra_->grade_end(grade)));
}

Vector AlgElem::n_coords() const {
  return Vector(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(algebra_->n_dim()));
}

Vector AlgElem::pplus_coords() const {
  return Vector(coords_.begin() + static_cast<std::ptrdiff_t>(algebra_->grade_end(0)), coords_.end());
}

bool AlgElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

AlgElem AlgElem::grade_component(int grade) const {
  Vector v(coords_.size());
  for (std::size_t a = algebra_->grade_begin(grade); a < algebra_->grade_end(grade); ++a) v[a] = coords_[a];
  return AlgElem(algebra_, std::move(v));
}

AlgElem AlgElem::n_part() const {
  Vector v(coords_.size());
  for (std::size_t a = 0; a < algebra_->n_dim(); ++a) v[a] = coords_[a];
  return AlgElem(algebra_, std::move(v));
}

AlgElem AlgElem::p_part() const {
  Vector v = coords_;
  for (std::size_t a = 0; a < algebra_->n_dim(); ++a) v[a] = Scalar();
  return AlgElem(algebra_, std::move(v));
}

bool AlgElem::in_grade(int grade) const {
  for (std::size_t a = 0; a < coords_.size(); ++a)
    if (algebra_->grade_of(a) != grade && !coords_[a].is_zero()) return false;
  return true;
}

bool AlgElem::in_p() const {
  for (std::size_t a = 0; a < algebra_->n_dim(); ++a)
    if (!coords_[a].is_zero()) return false;
  return true;
}

bool AlgElem::in_n() const {
  for (std::size_t a = algebra_->n_dim(); a < coords_.size(); ++a)
    if (!coords_[a].is_zero()) return false;
  return true;
}

bool AlgElem::in_pplus() const {
  for (std::size_t a = 0; a < algebra_->grade_end(0); ++a)
    if (!coords_[a].is_zero()) return false;
  return true;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  require_same_algebra(*this, o);
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] += o.coords_[a];
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  require_same_algebra(*this, o);
  for (std::size_t a = 0; a < coords_.size(); ++a) coords_[a] -= o.coords_[a];
  return *this;
}

AlgElem& AlgElem::operator*=(const Scalar& s) {
  if (!s.is_real()) throw Error(ErrorCode::NotInAlgebra, "real Lie algebras admit only rational scalars");
  for (auto& c : coords_) c *= s;
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
}

std::string AlgElem::str() const {
  std::string out;
  for (std::size_t a = 0; a < coords_.size(); ++a) {
    if (coords_[a].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += (coords_[a].is_one() ? "" : "(" + coords_[a].str() + ")*") + algebra_->label(a);
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const AlgElem& x) { return os << x.str(); }

void require_same_algebra(const AlgElem& x, const AlgElem& y) {
  if (x.algebra_ptr() != y.algebra_ptr() || x.algebra_ptr() == nullptr)
    throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
}

AlgElem bracket(const AlgElem& x, const AlgElem& y) {
  require_same_algebra(x, y);
  const GradedAlgebra& g = x.algebra();
  Vector out(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x.coord(a).is_zero()) continue;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (y.coord(b).is_zero()) continue;
      const Scalar xy = x.coord(a) * y.coord(b);
      for (const auto& [c, coef] : g.structure(a, b)) out[c] += xy * coef;
    }
  }
  return AlgElem(&g, std::move(out));
}

ScalarMatrix ad_matrix(const AlgElem& x) {
  const GradedAlgebra& g = x.algebra();
  ScalarMatrix m(g.dim(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x.coord(a).is_zero()) continue;
    for (std::size_t b = 0; b < g.dim(); ++b)
      for (const auto& [c, coef] : g.structure(a, b)) m(c, b) += x.coord(a) * coef;
  }
  return m;
}

AlgElem ad_pow(const AlgElem& x, const AlgElem& y, unsigned power) {
  AlgElem r = y;
  for (unsigned k = 0; k < power && !r.is_zero(); ++k) r = bracket(x, r);
  return r;
}

PolyMatrix exp_nilpotent(const AlgElem& x, const Poly& scale) {
  const ScalarMatrix m = x.matrix();
  if (!nilpotency_index(m)) throw Error(ErrorCode::NotNilpotent, "exp of a non-nilpotent element");
  return exp_nilpotent_matrix(to_poly(m) * scale);
}

// ---------------------------------------------------------------- GroupElem

GroupElem GroupElem::identity(const GradedAlgebra& algebra) {
  const auto id = ScalarMatrix::identity(algebra.matrix_dim());
  return GroupElem(&algebra, id, id);
}

GroupElem GroupElem::from_matrix(const GradedAlgebra& algebra, ScalarMatrix m) {
  if (m.rows() != algebra.matrix_dim() || m.cols() != algebra.matrix_dim())
    throw Error(ErrorCode::DimensionMismatch, "group element has the wrong size");
  ScalarMatrix inv;
  try {
    inv = parageo::inverse(m);
  } catch (const Error&) {
    throw Error(ErrorCode::NotInGroup, "matrix is singular");
  }
  if (algebra.unimodular() && determinant(m) != Scalar(1))
    throw Error(ErrorCode::NotInGroup, "determinant is not 1");
  for (std::size_t a = 0; a < algebra.dim(); ++a) {
    try {
      (void)algebra.from_matrix(m * algebra.basis_matrix(a) * inv);
    } catch (const Error&) {
      throw Error(ErrorCode::NotInGroup, "conjugation does not preserve " + algebra.name());
    }
  }
  return GroupElem(&algebra, std::move(m), std::move(inv));
}

GroupElem GroupElem::exp(const AlgElem& x) {
  const ScalarMatrix m = x.matrix();
  return GroupElem(x.algebra_ptr(), exp_nilpotent_matrix(m), exp_nilpotent_matrix(ScalarMatrix(-m)));
}

GroupElem GroupElem::inverse() const { return GroupElem(algebra_, inverse_, matrix_); }

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (a.algebra_ != b.algebra_) throw Error(ErrorCode::AlgebraMismatch, "group elements of different algebras");
  return GroupElem(a.algebra_, a.matrix_ * b.matrix_, b.inverse_ * a.inverse_);
}

AlgElem Ad(const GroupElem& g, const AlgElem& x) {
  if (&g.algebra() != x.algebra_ptr()) throw Error(ErrorCode::AlgebraMismatch, "Ad across algebras");
  return g.algebra().from_matrix(g.matrix() * x.matrix() * g.inverse_matrix());
}

AlgElem truncated_Ad(const GroupElem& g, const AlgElem& y) {
  if (!g.in_parabolic()) throw Error(ErrorCode::NotInParabolic, "truncated adjoint action needs g in P");
  if (!y.in_n()) throw Error(ErrorCode::NotInNilpotentPart, "truncated adjoint action needs y in n");
  return Ad(g, y).n_part();
}

GroupElem ParabolicNormalForm::reconstruct() const { return b0 * exp_product(b0.algebra(), z); }

GroupElem exp_product(const GradedAlgebra& algebra, const std::vector<AlgElem>& z) {
  GroupElem out = GroupElem::identity(algebra);
  for (const auto& zj : z) out = out * GroupElem::exp(zj);
  return out;
}

ParabolicNormalForm normal_form_P(const GroupElem& b) {
  const GradedAlgebra& g = b.algebra();
  if (!b.in_parabolic()) throw Error(ErrorCode::NotInParabolic, "normal form needs b in P");
  const ScalarMatrix b0m = g.entries_of_grade(b.matrix(), 0);
  GroupElem b0 = GroupElem::from_matrix(g, b0m);
  ScalarMatrix rest = b0.inverse_matrix() * b.matrix();
  std::vector<AlgElem> z;
  for (int j = 1; j <= g.depth(); ++j) {
    AlgElem zj = g.from_matrix(g.entries_of_grade(rest, j));
    rest = exp_nilpotent_matrix(ScalarMatrix(-zj.matrix())) * rest;
    z.push_back(std::move(zj));
  }
  if (!rest.is_identity()) throw Error(ErrorCode::NotInParabolic, "parabolic factorization did not close");
  return {std::move(b0), std::move(z)};
}

}  // namespace parageo
