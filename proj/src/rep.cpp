#include "qdd/rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qdd/errors.hpp"
#include "qdd/kernels.hpp"
#include "qdd/poly.hpp"

namespace qdd {

namespace {

std::pair<i64, i64> key_of(const GroupElem& g) { return {g.flip, g.rot}; }

void require_same_space(const Representation& a, const Representation& b,
                        const char* op) {
  if (!a.F->same_field(*b.F))
    throw std::invalid_argument(std::string(op) + ": field mismatch");
  if (a.G->n != b.G->n || a.G->gens != b.G->gens)
    throw std::invalid_argument(std::string(op) + ": group mismatch");
}

Matrix poly_at_matrix(const Poly& f, const Matrix& M) {
  const Fq& F = M.field();
  Matrix R(F, M.rows(), M.rows());
  for (int k = poly_deg(f); k >= 0; --k)
    R = R * M + Matrix::scalar(F, M.rows(), f.c[k]);
  return R;
}

// flattened view of a set of equal-shaped matrices, one per row
Matrix stack_as_rows(const std::vector<Matrix>& mats) {
  const Fq& F = mats[0].field();
  const int r = mats[0].rows(), c = mats[0].cols();
  Matrix V(F, static_cast<int>(mats.size()), r * c);
  for (size_t k = 0; k < mats.size(); ++k)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) V.set(static_cast<int>(k), i * c + j, mats[k].at(i, j));
  return V;
}

// row space of `stack_as_rows` kept in reduced form for membership tests
struct SpanChecker {
  Matrix R;  // reduced echelon rows
  std::vector<int> pivots;

  explicit SpanChecker(const std::vector<Matrix>& mats) {
    R = stack_as_rows(mats);
    pivots = kernels::row_reduce(*R.field(), R.data().data(), R.rows(), R.cols(), true);
  }
  int dim() const { return static_cast<int>(pivots.size()); }
  bool contains(const Matrix& M) const {
    const Fq& F = R.field();
    std::vector<FieldElem> v;
    v.reserve(static_cast<size_t>(M.rows()) * M.cols());
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
    for (size_t k = 0; k < pivots.size(); ++k) {
      const FieldElem coef = v[pivots[k]];
      if (F->is_zero(coef)) continue;
      for (int c = 0; c < R.cols(); ++c)
        v[c] = F->sub(v[c], F->mul(coef, R.at(static_cast<int>(k), c)));
    }
    for (const auto& e : v)
      if (!F->is_zero(e)) return false;
    return true;
  }
  // reduced basis back as matrices of the given shape
  std::vector<Matrix> basis(const Fq& F, int rows, int cols) const {
    std::vector<Matrix> out;
    for (size_t k = 0; k < pivots.size(); ++k) {
      Matrix M(F, rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.set(i, j, R.at(static_cast<int>(k), i * cols + j));
      out.push_back(std::move(M));
    }
    return out;
  }
};

std::vector<Matrix> images_from_tree(const RepGroup& G, const Fq& F,
                                     const std::vector<Matrix>& gen_images,
                                     int degree) {
  std::vector<Matrix> images(G.elems.size());
  std::vector<int> order(G.elems.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return G.depth[a] < G.depth[b]; });
  for (int i : order) {
    if (G.parent[i] < 0)
      images[i] = Matrix::identity(F, degree);
    else
      images[i] = images[G.parent[i]] * gen_images[G.parent_gen[i]];
  }
  return images;
}

}  // namespace

RepGroup RepGroup::from_generators(i64 n, std::string name, std::vector<GroupElem> gens) {
  RepGroup G;
  G.n = n;
  G.name = std::move(name);
  G.gens = std::move(gens);
  for (auto& g : G.gens) g = {((g.rot % n) + n) % n, ((g.flip % 2) + 2) % 2};

  // breadth-first closure from the identity, right-multiplying by generators
  std::map<std::pair<i64, i64>, int> disc;
  std::vector<GroupElem> de = {g_identity()};
  std::vector<int> dp = {-1}, dg = {-1}, dd = {0};
  disc[key_of(g_identity())] = 0;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (size_t k = 0; k < G.gens.size(); ++k) {
      const GroupElem next = gmul(n, de[at], G.gens[k]);
      if (disc.count(key_of(next))) continue;
      disc[key_of(next)] = static_cast<int>(de.size());
      de.push_back(next);
      dp.push_back(at);
      dg.push_back(static_cast<int>(k));
      dd.push_back(dd[at] + 1);
      queue.push_back(static_cast<int>(de.size()) - 1);
    }
  }

  std::vector<int> order(de.size());
  for (size_t i = 0; i < de.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return elem_less(de[a], de[b]); });
  std::vector<int> pos(de.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  for (int oi : order) {
    G.elems.push_back(de[oi]);
    G.parent.push_back(dp[oi] < 0 ? -1 : pos[dp[oi]]);
    G.parent_gen.push_back(dg[oi]);
    G.depth.push_back(dd[oi]);
  }
  return G;
}

bool RepGroup::contains(const GroupElem& g) const { return index_of(g) >= 0; }

int RepGroup::index_of(const GroupElem& g) const {
  const auto it = std::lower_bound(elems.begin(), elems.end(), g, elem_less);
  if (it == elems.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elems.begin());
}

Grp dihedral_group(i64 n) {
  return std::make_shared<const RepGroup>(
      RepGroup::from_generators(n, "D", {g_rot(n, 1), g_b()}));
}

Grp rotation_group(i64 n) {
  return std::make_shared<const RepGroup>(
      RepGroup::from_generators(n, "C", {g_rot(n, 1)}));
}

Grp sylow_rotation_group(const DihedralParams& P) {
  return std::make_shared<const RepGroup>(
      RepGroup::from_generators(P.n, "P", {g_rot(P.n, P.t)}));
}

Grp reflection_group(i64 n, const GroupElem& refl) {
  if (refl.flip != 1) throw std::invalid_argument("reflection_group: not a reflection");
  return std::make_shared<const RepGroup>(
      RepGroup::from_generators(n, "R", {refl}));
}

Grp klein_group(i64 n, const GroupElem& refl) {
  if (n % 2 != 0) throw std::invalid_argument("klein_group: n must be even");
  if (refl.flip != 1) throw std::invalid_argument("klein_group: not a reflection");
  return std::make_shared<const RepGroup>(
      RepGroup::from_generators(n, "K", {g_rot(n, n / 2), refl}));
}

Grp trivial_group(i64 n) {
  return std::make_shared<const RepGroup>(RepGroup::from_generators(n, "1", {}));
}

Representation make_rep(Grp G, Fq F, std::vector<Matrix> gen_images,
                        bool verify_relations) {
  if (!G || !F) throw std::invalid_argument("make_rep: missing group or field");
  if (gen_images.size() != G->gens.size())
    throw std::invalid_argument("make_rep: one matrix per generator required");
  int degree = 1;
  if (!gen_images.empty()) {
    degree = gen_images[0].rows();
    for (const auto& M : gen_images) {
      if (M.rows() != degree || M.cols() != degree)
        throw DimensionMismatchError("make_rep: images must be square of equal size");
      if (!M.field()->same_field(*F))
        throw std::invalid_argument("make_rep: image over the wrong field");
    }
  }
  Representation rho{std::move(G), std::move(F), degree, std::move(gen_images)};
  if (verify_relations) {
    const auto images = images_from_tree(*rho.G, rho.F, rho.gen_images, degree);
    for (size_t i = 0; i < rho.G->elems.size(); ++i)
      for (size_t k = 0; k < rho.G->gens.size(); ++k) {
        const GroupElem target = gmul(rho.G->n, rho.G->elems[i], rho.G->gens[k]);
        const int j = rho.G->index_of(target);
        if (j < 0) throw std::logic_error("make_rep: group not closed");
        if (!(images[j] == images[i] * rho.gen_images[k]))
          throw RelationError("make_rep: generator images violate the group law");
      }
  }
  return rho;
}

Matrix image(const Representation& rho, const GroupElem& g) {
  const int idx = rho.G->index_of(g);
  if (idx < 0) throw std::invalid_argument("image: element outside the group");
  std::vector<int> word;
  for (int at = idx; rho.G->parent[at] >= 0; at = rho.G->parent[at])
    word.push_back(rho.G->parent_gen[at]);
  Matrix M = Matrix::identity(rho.F, rho.degree);
  for (auto it = word.rbegin(); it != word.rend(); ++it) M = M * rho.gen_images[*it];
  return M;
}

std::vector<Matrix> all_images(const Representation& rho) {
  return images_from_tree(*rho.G, rho.F, rho.gen_images, rho.degree);
}

Representation trivial_rep(Grp G, Fq F) {
  std::vector<Matrix> imgs(G->gens.size(), Matrix::identity(F, 1));
  return make_rep(std::move(G), std::move(F), std::move(imgs), false);
}

Representation regular_rep(Grp G, Fq F) {
  const int d = static_cast<int>(G->elems.size());
  std::vector<Matrix> imgs;
  for (const GroupElem& g : G->gens) {
    Matrix M(F, d, d);
    for (int j = 0; j < d; ++j) {
      const int i = G->index_of(gmul(G->n, g, G->elems[j]));
      M.set(i, j, F->one());
    }
    imgs.push_back(std::move(M));
  }
  return make_rep(std::move(G), std::move(F), std::move(imgs), true);
}

Representation induce(const Representation& rho) {
  const i64 n = rho.G->n;
  const auto T = coset_representatives(n, rho.G->elems);
  const int blocks = static_cast<int>(T.size());
  const int d = rho.degree;
  const auto images = all_images(rho);
  Grp D = dihedral_group(n);

  std::vector<Matrix> imgs;
  for (const GroupElem& g : D->gens) {
    Matrix M(rho.F, blocks * d, blocks * d);
    for (int i = 0; i < blocks; ++i) {
      const GroupElem u = gmul(n, g, T[i]);
      for (int j = 0; j < blocks; ++j) {
        const GroupElem h = gmul(n, ginv(n, T[j]), u);
        const int hi = rho.G->index_of(h);
        if (hi < 0) continue;
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) M.set(j * d + r, i * d + c, images[hi].at(r, c));
        break;
      }
    }
    imgs.push_back(std::move(M));
  }
  return make_rep(std::move(D), rho.F, std::move(imgs), true);
}

Representation restrict_to(const Representation& rho, Grp H) {
  if (H->n != rho.G->n) throw std::invalid_argument("restrict_to: ambient size differs");
  for (const GroupElem& h : H->elems)
    if (!rho.G->contains(h))
      throw std::invalid_argument("restrict_to: not a subgroup of the source group");
  std::vector<Matrix> imgs;
  for (const GroupElem& h : H->gens) imgs.push_back(image(rho, h));
  return make_rep(std::move(H), rho.F, std::move(imgs), false);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_space(a, b, "direct_sum");
  std::vector<Matrix> imgs;
  for (size_t k = 0; k < a.gen_images.size(); ++k) {
    Matrix Z1(a.F, a.degree, b.degree), Z2(a.F, b.degree, a.degree);
    imgs.push_back(Matrix::block({{a.gen_images[k], Z1}, {Z2, b.gen_images[k]}}));
  }
  Representation out{a.G, a.F, a.degree + b.degree, std::move(imgs)};
  return out;
}

Representation tensor_product(const Representation& a, const Representation& b) {
  require_same_space(a, b, "tensor_product");
  std::vector<Matrix> imgs;
  for (size_t k = 0; k < a.gen_images.size(); ++k)
    imgs.push_back(kronecker(a.gen_images[k], b.gen_images[k]));
  Representation out{a.G, a.F, a.degree * b.degree, std::move(imgs)};
  return out;
}

Representation conjugate_rep(const Representation& rho, const GroupElem& x) {
  const i64 n = rho.G->n;
  std::vector<GroupElem> cgens;
  for (const GroupElem& g : rho.G->gens) cgens.push_back(gconj(n, x, g));
  Grp CG = std::make_shared<const RepGroup>(
      RepGroup::from_generators(n, rho.G->name + "'", std::move(cgens)));
  return make_rep(std::move(CG), rho.F, rho.gen_images, false);
}

std::vector<Matrix> hom_basis(const Representation& V, const Representation& W) {
  require_same_space(V, W, "hom_basis");
  if (V.gen_images.empty()) {
    // trivial group: every linear map intertwines
    std::vector<Matrix> out;
    for (int i = 0; i < W.degree; ++i)
      for (int j = 0; j < V.degree; ++j) {
        Matrix E(V.F, W.degree, V.degree);
        E.set(i, j, V.F->one());
        out.push_back(std::move(E));
      }
    return out;
  }
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (size_t k = 0; k < V.gen_images.size(); ++k)
    pairs.push_back({V.gen_images[k], W.gen_images[k]});
  return commutant_solve(pairs);
}

namespace {

// decomposition of the space into kernels of two coprime polynomial factors
// evaluated at u; valid as a module splitting whenever u commutes with the
// action. Returns nothing when the characteristic polynomial is a power of
// a single irreducible.
std::optional<std::pair<Matrix, Matrix>> coprime_split(const Matrix& u) {
  const Fq& F = u.field();
  const int d = u.rows();
  if (d == 0) return std::nullopt;
  const Poly cp = char_poly(u);
  const auto roots = roots_in_field(*F, cp);

  Poly A = poly_one(*F);
  if (!roots.empty()) {
    // largest (X - root)^k factor
    Poly lin = poly_linear(*F, roots[0]);
    Poly rest = cp;
    for (;;) {
      auto [q, r] = poly_divmod(*F, rest, lin);
      if (poly_deg(r) != -1) break;
      A = poly_mul(*F, A, lin);
      rest = q;
    }
    if (poly_deg(A) == poly_deg(cp)) {
      if (roots.size() < 2) return std::nullopt;  // single eigenvalue, full power
      // shouldn't happen: two roots force two coprime linear-power factors
      return std::nullopt;
    }
  } else {
    // no eigenvalue in F: strip out the factors of the smallest degree
    const i64 q = F->order();
    Poly xqe = poly_x(*F);
    for (int e = 1; e <= poly_deg(cp); ++e) {
      xqe = poly_powmod(*F, xqe, q, cp);
      const Poly g = poly_gcd(*F, cp, poly_sub(*F, xqe, poly_x(*F)));
      if (poly_deg(g) < 1) continue;
      // full multiplicity of those factors
      A = poly_gcd(*F, cp, poly_pow(*F, g, poly_deg(cp)));
      break;
    }
    if (poly_deg(A) < 1 || poly_deg(A) == poly_deg(cp)) return std::nullopt;
  }

  const Poly B = poly_divmod(*F, cp, A).first;
  Matrix KA = kernel_basis(poly_at_matrix(A, u));
  Matrix KB = kernel_basis(poly_at_matrix(B, u));
  if (KA.cols() == 0 || KB.cols() == 0 || KA.cols() + KB.cols() != d)
    return std::nullopt;
  return std::make_pair(std::move(KA), std::move(KB));
}

// single eigenvalue lambda with (X - lambda)^d as the full characteristic
// polynomial; nullopt otherwise
std::optional<FieldElem> sole_eigenvalue(const Matrix& u) {
  const Fq& F = u.field();
  const Poly cp = char_poly(u);
  const auto roots = roots_in_field(*F, cp);
  if (roots.size() != 1) return std::nullopt;
  if (!(poly_pow(*F, poly_linear(*F, roots[0]), u.rows()) == cp)) return std::nullopt;
  return roots[0];
}

Representation sub_rep_on(const Representation& V, const Matrix& basis) {
  std::vector<Matrix> gens;
  for (const auto& g : V.gen_images) gens.push_back(restrict_to_column_span(g, basis));
  Representation out{V.G, V.F, basis.cols(), std::move(gens)};
  return out;
}

}  // namespace

IsoResult is_isomorphic(const Representation& V, const Representation& W, Rng& rng) {
  require_same_space(V, W, "is_isomorphic");
  IsoResult out;
  if (V.degree != W.degree) {
    out.certified = true;
    out.detail = "degrees differ";
    return out;
  }
  for (size_t k = 0; k < V.gen_images.size(); ++k)
    if (!(char_poly(V.gen_images[k]) == char_poly(W.gen_images[k]))) {
      out.certified = true;
      out.detail = "generator characteristic polynomials differ";
      return out;
    }

  const auto H = hom_basis(V, W);
  if (H.empty()) {
    out.certified = true;
    out.detail = "intertwiner space is zero";
    return out;
  }

  const auto accept = [&](Matrix S) {
    for (size_t k = 0; k < V.gen_images.size(); ++k)
      if (!(W.gen_images[k] * S == S * V.gen_images[k]))
        throw std::logic_error("is_isomorphic: witness fails exact re-check");
    out.isomorphic = true;
    out.certified = true;
    out.witness = std::move(S);
    out.detail = "invertible intertwiner";
  };

  for (const auto& S : H)
    if (rank(S) == V.degree) {
      accept(S);
      return out;
    }
  if (H.size() == 1) {
    out.certified = true;
    out.detail = "intertwiner space is one singular line";
    return out;
  }

  // when both endomorphism rings are certified local, an isomorphism forces
  // one of the reduced basis intertwiners to be invertible, so the search
  // above was exhaustive
  const auto cv = indecomposability_certificate(V, rng);
  const auto cw = indecomposability_certificate(W, rng);
  if (cv.status == IndecompCertificate::Status::certified &&
      cw.status == IndecompCertificate::Status::certified) {
    out.certified = true;
    out.detail = "both modules have local endomorphism rings and no basis intertwiner is invertible";
    return out;
  }

  for (int trial = 0; trial < 64; ++trial) {
    Matrix S(V.F, W.degree, V.degree);
    for (const auto& B : H) S = S + B.scalar_mul(V.F->random(rng));
    if (rank(S) == V.degree) {
      accept(std::move(S));
      return out;
    }
  }

  // exhaustive combination search while the coefficient space stays small
  double combos = 1;
  for (size_t i = 0; i < H.size() && combos <= (1 << 16); ++i)
    combos *= static_cast<double>(V.F->order());
  if (combos <= (1 << 16)) {
    std::vector<i64> codes(H.size(), 0);
    for (;;) {
      size_t at = 0;
      while (at < codes.size() && codes[at] + 1 == V.F->order()) codes[at++] = 0;
      if (at == codes.size()) break;
      ++codes[at];
      Matrix S(V.F, W.degree, V.degree);
      for (size_t i = 0; i < H.size(); ++i)
        if (codes[i]) S = S + H[i].scalar_mul(V.F->from_code(codes[i]));
      if (rank(S) == V.degree) {
        accept(std::move(S));
        return out;
      }
    }
    out.certified = true;
    out.detail = "no invertible intertwiner (exhaustive search)";
    return out;
  }

  out.certified = false;
  out.detail = "no invertible intertwiner found by sampling";
  return out;
}

IndecompCertificate certificate_over_end(const Fq& F, int degree,
                                         const std::vector<Matrix>& E, Rng& rng) {
  if (E.empty())
    throw std::invalid_argument("certificate_over_end: endomorphism basis is empty");
  IndecompCertificate cert;
  cert.end_dim = static_cast<int>(E.size());
  if (E.size() == 1) {
    cert.status = IndecompCertificate::Status::certified;
    cert.radical_chain_length = 1;
    cert.detail = "endomorphism ring reduces to scalars";
    return cert;
  }

  // any endomorphism with two coprime spectral parts splits the module
  std::vector<FieldElem> lambdas;
  bool spectrum_ok = true;
  for (const auto& u : E) {
    if (auto split = coprime_split(u)) {
      cert.status = IndecompCertificate::Status::decomposed;
      cert.summands = std::move(*split);
      cert.detail = "basis endomorphism has split spectrum";
      return cert;
    }
    if (auto l = sole_eigenvalue(u)) {
      lambdas.push_back(*l);
    } else {
      spectrum_ok = false;
      break;
    }
  }

  if (spectrum_ok) {
    // candidate radical: traceless-at-lambda parts of the basis
    std::vector<Matrix> nb;
    for (size_t i = 0; i < E.size(); ++i) {
      Matrix u = E[i] - Matrix::scalar(F, degree, lambdas[i]);
      if (!u.is_zero()) nb.push_back(std::move(u));
    }
    if (!nb.empty()) {
      SpanChecker N(nb);
      bool ok = N.dim() == cert.end_dim - 1;
      // multiplicative closure makes the span an ideal complementing the
      // scalars
      auto nbasis = N.basis(F, degree, degree);
      for (size_t i = 0; i < nbasis.size() && ok; ++i)
        for (size_t j = 0; j < nbasis.size() && ok; ++j)
          if (!N.contains(nbasis[i] * nbasis[j])) ok = false;
      if (ok) {
        // explicit nilpotency: powers shrink strictly to zero
        std::vector<Matrix> cur = nbasis;
        int len = 1;
        int dim_cur = N.dim();
        while (ok && !cur.empty()) {
          std::vector<Matrix> prods;
          for (const auto& x : cur)
            for (const auto& y : nbasis) {
              Matrix p = x * y;
              if (!p.is_zero()) prods.push_back(std::move(p));
            }
          if (prods.empty()) {
            cur.clear();
            ++len;
            break;
          }
          SpanChecker Nk(prods);
          if (Nk.dim() >= dim_cur) {
            ok = false;
            break;
          }
          dim_cur = Nk.dim();
          cur = Nk.basis(F, degree, degree);
          ++len;
        }
        if (ok) {
          cert.status = IndecompCertificate::Status::certified;
          cert.radical_chain_length = len;
          cert.detail = "endomorphism ring is scalars plus an explicit nilpotent ideal";
          return cert;
        }
      }
    }
  }

  // structure tests failed: look for a split among random endomorphisms
  for (int trial = 0; trial < 24; ++trial) {
    Matrix u(F, degree, degree);
    for (const auto& B : E) u = u + B.scalar_mul(F->random(rng));
    if (auto split = coprime_split(u)) {
      cert.status = IndecompCertificate::Status::decomposed;
      cert.summands = std::move(*split);
      cert.detail = "random endomorphism has split spectrum";
      return cert;
    }
  }
  cert.status = IndecompCertificate::Status::inconclusive;
  cert.detail = spectrum_ok
                    ? "endomorphism ring failed the locality checks"
                    : "endomorphism with non-linear irreducible spectrum; not split "
                      "by sampling";
  return cert;
}

IndecompCertificate indecomposability_certificate(const Representation& V, Rng& rng) {
  return certificate_over_end(V.F, V.degree, hom_basis(V, V), rng);
}

namespace {

// conjugacy class sums of the acting group are central, so their spectral
// splits are module decompositions; peeling them off first keeps the
// endomorphism computations on small blocks
bool central_presplit(const Representation& V, std::pair<Matrix, Matrix>* parts) {
  const auto images = all_images(V);
  const i64 n = V.G->n;
  // conjugacy classes of the subgroup under its own conjugation action
  std::vector<bool> used(images.size(), false);
  for (size_t i = 0; i < V.G->elems.size(); ++i) {
    if (used[i]) continue;
    Matrix sum(V.F, V.degree, V.degree);
    for (size_t j = 0; j < V.G->elems.size(); ++j) {
      const GroupElem c = gconj(n, V.G->elems[j], V.G->elems[i]);
      const int ci = V.G->index_of(c);
      if (ci >= 0 && !used[ci]) {
        used[ci] = true;
        sum = sum + images[ci];
      }
    }
    if (auto split = coprime_split(sum)) {
      *parts = std::move(*split);
      return true;
    }
  }
  return false;
}

void ks_recurse(const Representation& V, Rng& rng, std::vector<Representation>* out,
                bool* all_certified) {
  if (V.degree == 0) return;
  std::pair<Matrix, Matrix> parts;
  if (central_presplit(V, &parts)) {
    ks_recurse(sub_rep_on(V, parts.first), rng, out, all_certified);
    ks_recurse(sub_rep_on(V, parts.second), rng, out, all_certified);
    return;
  }
  const auto cert = indecomposability_certificate(V, rng);
  switch (cert.status) {
    case IndecompCertificate::Status::certified:
      out->push_back(V);
      return;
    case IndecompCertificate::Status::inconclusive:
      out->push_back(V);
      if (all_certified) *all_certified = false;
      return;
    case IndecompCertificate::Status::decomposed:
      ks_recurse(sub_rep_on(V, cert.summands->first), rng, out, all_certified);
      ks_recurse(sub_rep_on(V, cert.summands->second), rng, out, all_certified);
      return;
  }
}

}  // namespace

std::vector<Representation> krull_schmidt_summands(const Representation& V, Rng& rng,
                                                   bool* all_certified) {
  if (all_certified) *all_certified = true;
  std::vector<Representation> out;
  ks_recurse(V, rng, &out, all_certified);
  return out;
}

std::vector<GroupElem> inertia_group(const Representation& rho, Rng& rng) {
  const i64 n = rho.G->n;
  for (const GroupElem& x : all_elements(n))
    for (const GroupElem& h : rho.G->gens)
      if (!rho.G->contains(gconj(n, x, h)))
        throw std::invalid_argument("inertia_group: subgroup is not normal");

  std::vector<GroupElem> result;
  for (const GroupElem& x : coset_representatives(n, rho.G->elems)) {
    std::vector<Matrix> imgs;
    for (const GroupElem& h : rho.G->gens)
      imgs.push_back(image(rho, gconj(n, ginv(n, x), h)));
    Representation conj = make_rep(rho.G, rho.F, std::move(imgs), false);
    if (is_isomorphic(rho, conj, rng).isomorphic)
      for (const GroupElem& h : rho.G->elems) result.push_back(gmul(n, x, h));
  }
  std::sort(result.begin(), result.end(), elem_less);
  return result;
}

bool mackey_restriction_holds(const Representation& rho, Rng& rng, std::string* detail) {
  const i64 n = rho.G->n;
  for (const GroupElem& x : all_elements(n))
    for (const GroupElem& h : rho.G->gens)
      if (!rho.G->contains(gconj(n, x, h)))
        throw std::invalid_argument("mackey check requires a normal subgroup");

  const Representation back = restrict_to(induce(rho), rho.G);
  std::optional<Representation> expect;
  for (const GroupElem& x : coset_representatives(n, rho.G->elems)) {
    std::vector<Matrix> imgs;
    for (const GroupElem& h : rho.G->gens)
      imgs.push_back(image(rho, gconj(n, ginv(n, x), h)));
    Representation part = make_rep(rho.G, rho.F, std::move(imgs), false);
    expect = expect ? direct_sum(*expect, part) : std::move(part);
  }
  const IsoResult iso = is_isomorphic(back, *expect, rng);
  if (detail) *detail = iso.detail;
  return iso.isomorphic;
}

Representation coset_permutation_rep(const Grp& G, const Grp& H, const Fq& F) {
  const i64 n = G->n;
  for (const GroupElem& h : H->elems)
    if (!G->contains(h))
      throw std::invalid_argument("coset_permutation_rep: H is not contained in G");
  const std::vector<GroupElem> reps = coset_representatives(n, H->elems);
  const int m = static_cast<int>(reps.size());
  const auto coset_index = [&](const GroupElem& g) {
    for (int k = 0; k < m; ++k)
      if (H->contains(gmul(n, ginv(n, reps[k]), g))) return k;
    throw std::logic_error("coset_permutation_rep: element escaped every coset");
  };
  std::vector<Matrix> imgs;
  for (const GroupElem& g : G->gens) {
    Matrix Pm(F, m, m);
    for (int j = 0; j < m; ++j) Pm.set(coset_index(gmul(n, g, reps[j])), j, F->one());
    imgs.push_back(std::move(Pm));
  }
  return make_rep(G, F, std::move(imgs), true);
}

bool induction_restriction_holds(const Representation& W, const Grp& H, Rng& rng,
                                 std::string* detail) {
  const i64 n = W.G->n;
  if (W.G->size() != 2 * n)
    throw std::invalid_argument("induction_restriction_holds: W must live over the whole group");
  for (const GroupElem& x : all_elements(n))
    for (const GroupElem& h : H->gens)
      if (!H->contains(gconj(n, x, h)))
        throw std::invalid_argument("induction_restriction_holds: H is not normal");

  const Representation lhs = induce(restrict_to(W, H));
  const Representation rhs = tensor_product(coset_permutation_rep(W.G, H, W.F), W);
  const IsoResult iso = is_isomorphic(lhs, rhs, rng);
  if (detail) *detail = iso.detail;
  return iso.isomorphic;
}

bool frobenius_adjunction_holds(const Representation& rho, const Representation& V,
                                std::string* detail) {
  const Representation ind = induce(rho);
  const size_t lhs = hom_basis(ind, V).size();
  const size_t rhs = hom_basis(rho, restrict_to(V, rho.G)).size();
  if (detail) {
    std::ostringstream os;
    os << "induced-side " << lhs << ", restricted-side " << rhs;
    *detail = os.str();
  }
  return lhs == rhs;
}

}  // namespace qdd
