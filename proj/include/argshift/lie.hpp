#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "argshift/linalg.hpp"
#include "argshift/rng.hpp"

namespace argshift {

class Rng;

/// A root eps_i - eps_j of sl_n (0-based indices); positive iff i < j.
struct Root {
  int i = 0;
  int j = 1;
  friend bool operator==(const Root&, const Root&) = default;
};

enum class ElementKind { Regular, Subregular, DeeperSingular };

struct ElementClass {
  ElementKind kind = ElementKind::DeeperSingular;
  int centralizer_dim = 0;
};

const char* to_string(ElementKind kind);

/// Static structure of sl_n: integer data (dim, rank, b, u, invariant
/// degrees), the root datum, a fixed Hermitian-orthonormal basis derived from
/// the elementary matrices, and the trace form's Gram matrix in that basis.
/// Cheap to copy; the structure tables are shared.
class Algebra {
 public:
  explicit Algebra(int n);

  int n() const;
  int dim() const;   // n^2 - 1
  int rank() const;  // n - 1
  int b() const;     // (dim + rank) / 2, the dimension of a Borel subalgebra
  int u() const;     // b - rank, the dimension of a maximal nilpotent subalgebra
  const std::vector<int>& degrees() const;  // (2, 3, ..., n)

  /// Fixed orthonormal basis of sl_n (w.r.t. the Hermitian dot product):
  /// rank diagonal generators first, then E_ij/E_ji pairs for i < j.
  const std::vector<CMatrix>& basis() const;

  /// Gram matrix of the bilinear trace form tr(xy) in the fixed basis.
  const CMatrix& trace_gram() const;

  /// Coordinates of a (traceless) matrix in the fixed basis.
  CVector coordinates(const CMatrix& m) const;

  /// Inverse of coordinates().
  CMatrix matrix_from(const CVector& coords) const;

  const std::vector<Root>& positive_roots() const;  // lexicographic (i, j)
  const std::vector<Root>& simple_roots() const;    // (i, i+1)

  /// The Cartan subalgebra of traceless diagonal matrices, as a subspace.
  const Subspace& cartan() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.n() == b.n(); }

  struct Tables;  // shared immutable structure data

 private:
  std::shared_ptr<const Tables> tables_;
};

/// A traceless n x n complex matrix, the ambient point type for all maps.
/// Construction validates finiteness and |trace| <= 1e-12 * max(norm, 1).
class Element {
 public:
  Element(Algebra algebra, CMatrix matrix);

  const Algebra& algebra() const { return algebra_; }
  const CMatrix& matrix() const { return matrix_; }
  double norm() const { return matrix_.norm(); }
  CVector coordinates() const { return algebra_.coordinates(matrix_); }

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(Complex scalar) const;
  friend Element operator*(Complex scalar, const Element& x) { return x * scalar; }

 private:
  Algebra algebra_;
  CMatrix matrix_;
};

/// Removes the (roundoff) trace component before constructing an Element;
/// for inputs that are traceless modulo floating-point noise.
Element make_traceless(const Algebra& algebra, const CMatrix& m);

Element zero_element(const Algebra& algebra);
Element diagonal_element(const Algebra& algebra, const CVector& diag);

/// The bilinear trace form tr(xy).
Complex trace_form(const Element& x, const Element& y);

/// Lie bracket [x, y] = xy - yx.
Element bracket(const Element& x, const Element& y);

/// Matrix of ad(x): z -> [x, z] in the fixed basis (dim x dim).
CMatrix ad_matrix(const Element& x);

/// Numerical kernel of ad(x); always contains x itself.
Subspace centralizer(const Element& x, double tol_rel = kDefaultRankTol);

/// Classification by centralizer dimension (rank = Regular, rank+2 =
/// Subregular, else DeeperSingular), cross-checked against the Krylov
/// regularity test dim span{I, x, ..., x^{n-1}} = n. Throws
/// ClassifierDisagreementError when the two tests disagree.
ElementClass classify(const Element& x, double tol_rel = kDefaultRankTol);

/// The principal nilpotent: ones on the first subdiagonal (the sum of the
/// negative simple root vectors). Regular, with all invariants zero.
Element regular_nilpotent(const Algebra& algebra);

/// Root vector e_alpha = E_ij (or e_{-alpha} = E_ji when negative).
Element root_vector(const Algebra& algebra, Root alpha, bool negative = false);

/// Coroot h_alpha = E_ii - E_jj; satisfies alpha(h_alpha) = 2.
Element coroot(const Algebra& algebra, Root alpha);

/// alpha(x) = x_ii - x_jj for diagonal x (reads the diagonal only).
Complex root_value(Root alpha, const Element& x);

/// A reproducible point of ker(alpha)°: a small-integer diagonal (shifted to
/// trace zero) whose entries coincide exactly at alpha and differ by at least
/// one everywhere else. Always subregular.
Element sample_ker_alpha_circ(const Algebra& algebra, Root alpha, Rng& rng);

/// An explicit SL_n conjugator g = Q * U with Q a det-normalized unitary
/// factor of a random Gaussian matrix and U a random unipotent upper
/// triangular with entries in [-1, 1]. Records its seed for reproduction and
/// pushes elements and subspaces forward through Ad_g.
struct Conjugator {
  CMatrix g;
  CMatrix g_inv;
  std::uint64_t seed = 0;

  Element apply(const Element& x) const;
  Subspace apply(const Algebra& algebra, const Subspace& s) const;
};

Conjugator identity_conjugator(const Algebra& algebra);
Conjugator random_conjugator(const Algebra& algebra, std::uint64_t seed);

/// Draws a conjugator from rng and applies it to x.
std::pair<Conjugator, Element> random_conjugation(const Element& x, Rng& rng);

/// Closed-form subspaces attached to a positive root alpha.
struct LeviData {
  Element e_plus;        // e_alpha
  Element e_minus;       // e_{-alpha}
  Element h;             // h_alpha
  Subspace ker_alpha;    // diagonal matrices with alpha = 0, dim rank-1
  Subspace levi;         // g_{-alpha} + cartan + g_alpha, dim rank+2
  Subspace levi_comm;    // its derived algebra, span{e_-, h, e_+}, dim 3
  Subspace u_plus;       // positive root spaces except alpha, dim u-1
  Subspace u_minus;      // negative counterpart, dim u-1
  Subspace borel_minus;  // lower triangular traceless, dim b
};

LeviData levi_data(const Algebra& algebra, Root alpha);

/// Span of all brackets of basis pairs of s.
Subspace derived_subalgebra(const Algebra& algebra, const Subspace& s,
                            double tol_rel = kDefaultRankTol);

/// Centre of the algebra spanned by s: {z in s : [z, s] = 0}.
Subspace subalgebra_center(const Algebra& algebra, const Subspace& s,
                           double tol_rel = kDefaultRankTol);

/// Frobenius mass of the strictly upper triangular part.
double strict_upper_mass(const Element& x);

}  // namespace argshift
