#include "argshift/lie.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace argshift {

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Regular: return "Regular";
    case ElementKind::Subregular: return "Subregular";
    case ElementKind::DeeperSingular: return "DeeperSingular";
  }
  return "?";
}

struct Algebra::Tables {
  int n = 0;
  int dim = 0;
  int rank = 0;
  int b = 0;
  int u = 0;
  std::vector<int> degrees;
  std::vector<CMatrix> basis;
  CMatrix gram;
  std::vector<Root> positive_roots;
  std::vector<Root> simple_roots;
  Subspace cartan;
};

namespace {

std::shared_ptr<const Algebra::Tables> build_tables(int n) {
  if (n < 2) throw Error("Algebra: n must be at least 2");
  auto t = std::make_shared<Algebra::Tables>();
  t->n = n;
  t->dim = n * n - 1;
  t->rank = n - 1;
  t->b = (t->dim + t->rank) / 2;
  t->u = t->b - t->rank;
  for (int k = 2; k <= n; ++k) t->degrees.push_back(k);

  // diagonal generators: (E_11 + ... + E_kk - k E_{k+1,k+1}) / sqrt(k(k+1))
  for (int k = 1; k <= n - 1; ++k) {
    CMatrix m = CMatrix::Zero(n, n);
    for (int p = 0; p < k; ++p) m(p, p) = 1.0;
    m(k, k) = -static_cast<double>(k);
    t->basis.push_back(m / std::sqrt(static_cast<double>(k) * (k + 1)));
  }
  // elementary off-diagonal pairs
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      CMatrix upper = CMatrix::Zero(n, n);
      upper(i, j) = 1.0;
      t->basis.push_back(upper);
      CMatrix lower = CMatrix::Zero(n, n);
      lower(j, i) = 1.0;
      t->basis.push_back(lower);
    }
  }

  t->gram = CMatrix::Zero(t->dim, t->dim);
  for (int p = 0; p < t->dim; ++p) {
    for (int q = p; q < t->dim; ++q) {
      const Complex value = (t->basis[p] * t->basis[q]).trace();
      t->gram(p, q) = value;
      t->gram(q, p) = value;
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t->positive_roots.push_back({i, j});
  }
  for (int i = 0; i + 1 < n; ++i) t->simple_roots.push_back({i, i + 1});

  CMatrix cartan_basis = CMatrix::Zero(t->dim, t->rank);
  for (int k = 0; k < t->rank; ++k) {
    // diagonal generators are the first `rank` coordinates
    cartan_basis(k, k) = 1.0;
  }
  t->cartan = Subspace(std::move(cartan_basis));
  return t;
}

}  // namespace

Algebra::Algebra(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_tables(n);
  tables_ = slot;
}

int Algebra::n() const { return tables_->n; }
int Algebra::dim() const { return tables_->dim; }
int Algebra::rank() const { return tables_->rank; }
int Algebra::b() const { return tables_->b; }
int Algebra::u() const { return tables_->u; }
const std::vector<int>& Algebra::degrees() const { return tables_->degrees; }
const std::vector<CMatrix>& Algebra::basis() const { return tables_->basis; }
const CMatrix& Algebra::trace_gram() const { return tables_->gram; }
const std::vector<Root>& Algebra::positive_roots() const { return tables_->positive_roots; }
const std::vector<Root>& Algebra::simple_roots() const { return tables_->simple_roots; }
const Subspace& Algebra::cartan() const { return tables_->cartan; }

CVector Algebra::coordinates(const CMatrix& m) const {
  CVector coords(dim());
  for (int k = 0; k < dim(); ++k) coords(k) = (basis()[k].adjoint() * m).trace();
  return coords;
}

CMatrix Algebra::matrix_from(const CVector& coords) const {
  if (coords.size() != dim()) {
    throw DimensionMismatchError("matrix_from: coordinate vector has wrong length");
  }
  CMatrix m = CMatrix::Zero(n(), n());
  for (int k = 0; k < dim(); ++k) m += coords(k) * basis()[k];
  return m;
}

Element::Element(Algebra algebra, CMatrix matrix)
    : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != algebra_.n() || matrix_.cols() != algebra_.n()) {
    throw DimensionMismatchError("Element: matrix size does not match the algebra");
  }
  if (!matrix_.allFinite()) throw NonFiniteError("Element: matrix contains NaN/Inf");
  const double trace_mag = std::abs(matrix_.trace());
  if (trace_mag > 1e-12 * std::max(1.0, matrix_.norm())) {
    throw Error("Element: matrix is not traceless");
  }
}

Element Element::operator+(const Element& other) const {
  if (!(algebra_ == other.algebra_)) throw AlgebraMismatchError("Element: algebra mismatch");
  return Element(algebra_, matrix_ + other.matrix_);
}

Element Element::operator-(const Element& other) const {
  if (!(algebra_ == other.algebra_)) throw AlgebraMismatchError("Element: algebra mismatch");
  return Element(algebra_, matrix_ - other.matrix_);
}

Element Element::operator*(Complex scalar) const { return Element(algebra_, scalar * matrix_); }

Element make_traceless(const Algebra& algebra, const CMatrix& m) {
  const Complex mean = m.trace() / static_cast<double>(algebra.n());
  return Element(algebra, m - mean * CMatrix::Identity(algebra.n(), algebra.n()));
}

Element zero_element(const Algebra& algebra) {
  return Element(algebra, CMatrix::Zero(algebra.n(), algebra.n()));
}

Element diagonal_element(const Algebra& algebra, const CVector& diag) {
  if (diag.size() != algebra.n()) {
    throw DimensionMismatchError("diagonal_element: wrong number of entries");
  }
  CMatrix m = CMatrix::Zero(algebra.n(), algebra.n());
  for (int k = 0; k < algebra.n(); ++k) m(k, k) = diag(k);
  return Element(algebra, std::move(m));
}

Complex trace_form(const Element& x, const Element& y) {
  if (!(x.algebra() == y.algebra())) throw AlgebraMismatchError("trace_form: algebra mismatch");
  return (x.matrix() * y.matrix()).trace();
}

Element bracket(const Element& x, const Element& y) {
  if (!(x.algebra() == y.algebra())) throw AlgebraMismatchError("bracket: algebra mismatch");
  return make_traceless(x.algebra(), x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

CMatrix ad_matrix(const Element& x) {
  const Algebra& alg = x.algebra();
  CMatrix ad(alg.dim(), alg.dim());
  for (int k = 0; k < alg.dim(); ++k) {
    const CMatrix commutator = x.matrix() * alg.basis()[k] - alg.basis()[k] * x.matrix();
    ad.col(k) = alg.coordinates(commutator);
  }
  return ad;
}

Subspace centralizer(const Element& x, double tol_rel) {
  return kernel(ad_matrix(x), tol_rel);
}

ElementClass classify(const Element& x, double tol_rel) {
  const Algebra& alg = x.algebra();
  const int n = alg.n();
  const double norm = x.norm();
  const Element scaled = norm > 0.0 ? x * Complex(1.0 / norm) : x;

  const int cent_dim = alg.dim() - svd_rank(ad_matrix(scaled), tol_rel).rank;

  // Krylov regularity test: x is regular iff its minimal polynomial has
  // degree n, i.e. I, x, ..., x^{n-1} are independent.
  CMatrix krylov(n * n, n);
  CMatrix power = CMatrix::Identity(n, n);
  for (int p = 0; p < n; ++p) {
    krylov.col(p) = power.reshaped();
    if (p + 1 < n) power = power * scaled.matrix();
  }
  const int krylov_dim = svd_rank(krylov, tol_rel).rank;

  const bool regular_by_centralizer = cent_dim == alg.rank();
  const bool regular_by_krylov = krylov_dim == n;
  if (regular_by_centralizer != regular_by_krylov) {
    throw ClassifierDisagreementError("classify: regularity tests disagree (ill-conditioned input)");
  }

  ElementClass result;
  result.centralizer_dim = cent_dim;
  if (cent_dim == alg.rank()) {
    result.kind = ElementKind::Regular;
  } else if (cent_dim == alg.rank() + 2) {
    result.kind = ElementKind::Subregular;
  } else {
    result.kind = ElementKind::DeeperSingular;
  }
  return result;
}

Element regular_nilpotent(const Algebra& algebra) {
  CMatrix m = CMatrix::Zero(algebra.n(), algebra.n());
  for (int k = 0; k + 1 < algebra.n(); ++k) m(k + 1, k) = 1.0;
  return Element(algebra, std::move(m));
}

Element root_vector(const Algebra& algebra, Root alpha, bool negative) {
  CMatrix m = CMatrix::Zero(algebra.n(), algebra.n());
  if (negative) {
    m(alpha.j, alpha.i) = 1.0;
  } else {
    m(alpha.i, alpha.j) = 1.0;
  }
  return Element(algebra, std::move(m));
}

Element coroot(const Algebra& algebra, Root alpha) {
  CMatrix m = CMatrix::Zero(algebra.n(), algebra.n());
  m(alpha.i, alpha.i) = 1.0;
  m(alpha.j, alpha.j) = -1.0;
  return Element(algebra, std::move(m));
}

Complex root_value(Root alpha, const Element& x) {
  return x.matrix()(alpha.i, alpha.i) - x.matrix()(alpha.j, alpha.j);
}

namespace {

void require_positive_root(const Algebra& algebra, Root alpha, const char* who) {
  if (alpha.i < 0 || alpha.j >= algebra.n() || alpha.i >= alpha.j) {
    throw Error(std::string(who) + ": not a positive root");
  }
}

}  // namespace

Element sample_ker_alpha_circ(const Algebra& algebra, Root alpha, Rng& rng) {
  require_positive_root(algebra, alpha, "sample_ker_alpha_circ");
  const int n = algebra.n();
  for (int attempt = 0; attempt < 256; ++attempt) {
    // one value per eigenvalue group: the alpha pair shares one, the rest are
    // singletons; integer values keep every other root at distance >= 1
    std::vector<int> value(n, 0);
    const int shared = rng.uniform_int(-4, 4);
    value[alpha.i] = shared;
    value[alpha.j] = shared;
    for (int k = 0; k < n; ++k) {
      if (k != alpha.i && k != alpha.j) value[k] = rng.uniform_int(-4, 4);
    }
    bool distinct = true;
    for (int p = 0; p < n && distinct; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const bool same_group = (p == alpha.i && q == alpha.j);
        if (!same_group && value[p] == value[q]) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) continue;
    double mean = 0.0;
    for (int v : value) mean += v;
    mean /= n;
    CVector diag(n);
    for (int k = 0; k < n; ++k) diag(k) = Complex(value[k] - mean, 0.0);
    Element candidate = diagonal_element(algebra, diag);
    if (classify(candidate).kind == ElementKind::Subregular) return candidate;
  }
  throw SamplerExhaustedError("sample_ker_alpha_circ: retry budget exhausted");
}

Element Conjugator::apply(const Element& x) const {
  return make_traceless(x.algebra(), g * x.matrix() * g_inv);
}

Subspace Conjugator::apply(const Algebra& algebra, const Subspace& s) const {
  CMatrix images(algebra.dim(), s.dim());
  for (int k = 0; k < s.dim(); ++k) {
    const CMatrix m = algebra.matrix_from(s.basis().col(k));
    images.col(k) = algebra.coordinates(g * m * g_inv);
  }
  // Ad_g is not unitary, so re-orthonormalize
  return span_of_columns(images);
}

Conjugator identity_conjugator(const Algebra& algebra) {
  return Conjugator{CMatrix::Identity(algebra.n(), algebra.n()),
                    CMatrix::Identity(algebra.n(), algebra.n()), 0};
}

Conjugator random_conjugator(const Algebra& algebra, std::uint64_t seed) {
  const int n = algebra.n();
  Rng rng(seed);
  CMatrix gauss(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gauss(i, j) = rng.complex_normal();
  }
  CMatrix q = Eigen::HouseholderQR<CMatrix>(gauss).householderQ();
  // normalize det(q) to 1 so that q lies in SL_n
  const Complex det = q.determinant();
  q *= std::pow(det, -1.0 / n);

  CMatrix unipotent = CMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) unipotent(i, j) = rng.uniform(-1.0, 1.0);
  }
  CMatrix unipotent_inv =
      unipotent.triangularView<Eigen::Upper>().solve(CMatrix::Identity(n, n));

  Conjugator c;
  c.g = q * unipotent;
  c.g_inv = unipotent_inv * q.adjoint();
  c.seed = seed;
  return c;
}

std::pair<Conjugator, Element> random_conjugation(const Element& x, Rng& rng) {
  const Conjugator c = random_conjugator(x.algebra(), rng.next_u64());
  return {c, c.apply(x)};
}

LeviData levi_data(const Algebra& algebra, Root alpha) {
  require_positive_root(algebra, alpha, "levi_data");
  const int n = algebra.n();
  const int dim = algebra.dim();
  LeviData data{root_vector(algebra, alpha),
                root_vector(algebra, alpha, true),
                coroot(algebra, alpha),
                Subspace(dim),
                Subspace(dim),
                Subspace(dim),
                Subspace(dim),
                Subspace(dim),
                Subspace(dim)};

  // ker(alpha): diagonal traceless with equal entries at alpha.i, alpha.j.
  // The n-1 spanning vectors below have one linear relation.
  std::vector<CVector> ker_vectors;
  {
    CMatrix pair = CMatrix::Zero(n, n);
    pair(alpha.i, alpha.i) = 1.0;
    pair(alpha.j, alpha.j) = 1.0;
    pair -= CMatrix::Identity(n, n) * Complex(2.0 / n);
    ker_vectors.push_back(algebra.coordinates(pair));
    for (int k = 0; k < n; ++k) {
      if (k == alpha.i || k == alpha.j) continue;
      CMatrix single = CMatrix::Zero(n, n);
      single(k, k) = 1.0;
      single -= CMatrix::Identity(n, n) * Complex(1.0 / n);
      ker_vectors.push_back(algebra.coordinates(single));
    }
  }
  data.ker_alpha = span(dim, ker_vectors);

  std::vector<CVector> levi_vectors;
  levi_vectors.push_back(data.e_minus.coordinates());
  levi_vectors.push_back(data.e_plus.coordinates());
  for (int k = 0; k < algebra.rank(); ++k) levi_vectors.push_back(algebra.cartan().basis().col(k));
  data.levi = span(dim, levi_vectors);

  data.levi_comm =
      span(dim, {data.e_minus.coordinates(), data.h.coordinates(), data.e_plus.coordinates()});

  std::vector<CVector> upper, lower;
  for (const Root& beta : algebra.positive_roots()) {
    if (beta == alpha) continue;
    upper.push_back(root_vector(algebra, beta).coordinates());
    lower.push_back(root_vector(algebra, beta, true).coordinates());
  }
  data.u_plus = span(dim, upper);
  data.u_minus = span(dim, lower);

  std::vector<CVector> borel;
  for (int k = 0; k < algebra.rank(); ++k) borel.push_back(algebra.cartan().basis().col(k));
  for (const Root& beta : algebra.positive_roots()) {
    borel.push_back(root_vector(algebra, beta, true).coordinates());
  }
  data.borel_minus = span(dim, borel);
  return data;
}

Subspace derived_subalgebra(const Algebra& algebra, const Subspace& s, double tol_rel) {
  std::vector<CVector> brackets;
  std::vector<CMatrix> mats;
  mats.reserve(s.dim());
  for (int k = 0; k < s.dim(); ++k) mats.push_back(algebra.matrix_from(s.basis().col(k)));
  for (int p = 0; p < s.dim(); ++p) {
    for (int q = p + 1; q < s.dim(); ++q) {
      brackets.push_back(algebra.coordinates(mats[p] * mats[q] - mats[q] * mats[p]));
    }
  }
  // unit-norm basis matrices give the brackets a natural O(1) scale; an
  // abelian input must come out zero-dimensional rather than as noise
  return span(algebra.dim(), brackets, tol_rel, 1.0);
}

Subspace subalgebra_center(const Algebra& algebra, const Subspace& s, double tol_rel) {
  const int k = s.dim();
  if (k == 0) return Subspace::zero(algebra.dim());
  std::vector<CMatrix> mats;
  mats.reserve(k);
  for (int p = 0; p < k; ++p) mats.push_back(algebra.matrix_from(s.basis().col(p)));
  // rows of the stacked system: coordinates of [s_p, s_q] as a function of the
  // coefficient vector over the s_p
  CMatrix stacked(k * algebra.dim(), k);
  for (int q = 0; q < k; ++q) {
    for (int p = 0; p < k; ++p) {
      stacked.block(q * algebra.dim(), p, algebra.dim(), 1) =
          algebra.coordinates(mats[p] * mats[q] - mats[q] * mats[p]);
    }
  }
  const Subspace coeff_kernel = kernel(stacked, tol_rel, 1.0);
  // orthonormal coefficients against an orthonormal basis stay orthonormal
  return Subspace(CMatrix(s.basis() * coeff_kernel.basis()));
}

double strict_upper_mass(const Element& x) {
  double sum = 0.0;
  for (int i = 0; i < x.algebra().n(); ++i) {
    for (int j = i + 1; j < x.algebra().n(); ++j) sum += std::norm(x.matrix()(i, j));
  }
  return std::sqrt(sum);
}

}  // namespace argshift
