#include "qdd/qdouble.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace qdd {

namespace {

i64 elem_id(i64 n, const GroupElem& e) { return e.flip * n + e.rot; }
GroupElem elem_of(i64 n, i64 id) { return {id % n, id / n}; }

std::string dbi_str(const DoubleBasisIndex& x) {
  return "phi_" + elem_to_string(x.g) + "(x)" + elem_to_string(x.h);
}

}  // namespace

std::optional<DoubleBasisIndex> double_multiply(i64 n, const DoubleBasisIndex& x,
                                                const DoubleBasisIndex& y) {
  if (!(x.g == gconj(n, x.h, y.g))) return std::nullopt;
  return DoubleBasisIndex{x.g, gmul(n, x.h, y.h)};
}

std::vector<std::pair<DoubleBasisIndex, DoubleBasisIndex>> double_comultiply(
    i64 n, const DoubleBasisIndex& x) {
  std::vector<std::pair<DoubleBasisIndex, DoubleBasisIndex>> out;
  out.reserve(static_cast<size_t>(2 * n));
  for (const GroupElem& w : all_elements(n))
    out.emplace_back(DoubleBasisIndex{w, x.h},
                     DoubleBasisIndex{gmul(n, x.g, ginv(n, w)), x.h});
  return out;
}

i64 double_counit(const DoubleBasisIndex& x) { return x.g == g_identity() ? 1 : 0; }

DoubleBasisIndex double_antipode(i64 n, const DoubleBasisIndex& x) {
  const GroupElem hi = ginv(n, x.h);
  return {gconj(n, hi, ginv(n, x.g)), hi};
}

namespace {

// the whole algebra as integer structure constants: products and antipode
// land on single basis elements (or vanish), coproducts fan out over 2n
// factorizations of the dual part
struct DoubleTable {
  i64 n = 0;
  i64 B = 0;  // 4n^2 basis elements, id = g_id * 2n + h_id
  std::vector<int> mul;   // B*B entries, product id or -1
  std::vector<int> anti;  // B entries
  std::vector<char> eps;  // B entries, 0/1
  std::vector<std::vector<std::pair<int, int>>> comul;
  std::vector<int> unit_ids;  // the ids of phi_g (x) 1

  int id_of(const DoubleBasisIndex& x) const {
    return static_cast<int>(elem_id(n, x.g) * 2 * n + elem_id(n, x.h));
  }
  DoubleBasisIndex at(i64 id) const {
    return {elem_of(n, id / (2 * n)), elem_of(n, id % (2 * n))};
  }
};

DoubleTable build_table(i64 n, bool corrupt) {
  DoubleTable T;
  T.n = n;
  T.B = 4 * n * n;
  T.mul.assign(static_cast<size_t>(T.B) * T.B, -1);
  T.anti.resize(T.B);
  T.eps.resize(T.B);
  T.comul.resize(T.B);
  for (i64 x = 0; x < T.B; ++x) {
    const DoubleBasisIndex bx = T.at(x);
    T.anti[x] = T.id_of(double_antipode(n, bx));
    T.eps[x] = static_cast<char>(double_counit(bx));
    for (const auto& [u, v] : double_comultiply(n, bx))
      T.comul[x].emplace_back(T.id_of(u), T.id_of(v));
    for (i64 y = 0; y < T.B; ++y)
      if (auto pr = double_multiply(n, bx, T.at(y))) T.mul[x * T.B + y] = T.id_of(*pr);
  }
  for (const GroupElem& g : all_elements(n))
    T.unit_ids.push_back(T.id_of({g, g_identity()}));
  if (corrupt) {
    // negative control: one product is sent to the wrong group part
    const i64 x = T.id_of({g_identity(), g_rot(n, 1)});
    const i64 y = T.id_of({g_identity(), g_identity()});
    T.mul[x * T.B + y] = T.id_of({g_identity(), g_identity()});
  }
  return T;
}

// formal sums with integer coefficients, compared after reduction mod p
using Counts = std::map<i64, i64>;

Counts reduced(const Counts& m, i64 p) {
  Counts out;
  for (const auto& [k, v] : m) {
    const i64 r = ((v % p) + p) % p;
    if (r != 0) out[k] = r;
  }
  return out;
}

struct MinIndex {
  std::atomic<i64> v{INT64_MAX};
  void offer(i64 idx) {
    i64 cur = v.load(std::memory_order_relaxed);
    while (idx < cur && !v.compare_exchange_weak(cur, idx)) {
    }
  }
  bool hit() const { return v.load() != INT64_MAX; }
};

}  // namespace

HopfReport verify_hopf(i64 p, i64 n, bool corrupt) {
  if (n < 1 || p < 2) throw std::invalid_argument("verify_hopf: bad parameters");
  const DoubleTable T = build_table(n, corrupt);
  const i64 B = T.B;
  HopfReport report;

  {
    AxiomCheck ax;
    ax.name = "associativity";
    ax.instances = B * B * B;
    MinIndex bad;
#pragma omp parallel for schedule(static)
    for (i64 x = 0; x < B; ++x)
      for (i64 y = 0; y < B; ++y) {
        const int xy = T.mul[x * B + y];
        for (i64 z = 0; z < B; ++z) {
          const int l = xy < 0 ? -1 : T.mul[static_cast<i64>(xy) * B + z];
          const int yz = T.mul[y * B + z];
          const int r = yz < 0 ? -1 : T.mul[x * B + yz];
          if (l != r) bad.offer((x * B + y) * B + z);
        }
      }
    if (bad.hit()) {
      const i64 idx = bad.v.load();
      ax.ok = false;
      ax.failure = "(" + dbi_str(T.at(idx / (B * B))) + ", " +
                   dbi_str(T.at(idx / B % B)) + ", " + dbi_str(T.at(idx % B)) + ")";
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "unit element";
    ax.instances = 2 * B;
    for (i64 y = 0; y < B && ax.ok; ++y) {
      Counts left, right, want;
      want[y] = 1;
      for (const int u : T.unit_ids) {
        const int l = T.mul[static_cast<i64>(u) * B + y];
        if (l >= 0) ++left[l];
        const int r = T.mul[y * B + u];
        if (r >= 0) ++right[r];
      }
      if (reduced(left, p) != reduced(want, p) || reduced(right, p) != reduced(want, p)) {
        ax.ok = false;
        ax.failure = dbi_str(T.at(y));
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "coassociativity";
    ax.instances = B;
    for (i64 x = 0; x < B && ax.ok; ++x) {
      Counts l, r;
      for (const auto& [u, v] : T.comul[x]) {
        for (const auto& [u1, u2] : T.comul[u])
          ++l[(static_cast<i64>(u1) * B + u2) * B + v];
        for (const auto& [v1, v2] : T.comul[v])
          ++r[(static_cast<i64>(u) * B + v1) * B + v2];
      }
      if (reduced(l, p) != reduced(r, p)) {
        ax.ok = false;
        ax.failure = dbi_str(T.at(x));
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "counit";
    ax.instances = B + B * B;
    for (i64 x = 0; x < B && ax.ok; ++x) {
      Counts l, r, want;
      want[x] = 1;
      for (const auto& [u, v] : T.comul[x]) {
        if (T.eps[u]) ++l[v];
        if (T.eps[v]) ++r[u];
      }
      if (reduced(l, p) != reduced(want, p) || reduced(r, p) != reduced(want, p)) {
        ax.ok = false;
        ax.failure = dbi_str(T.at(x));
      }
    }
    // multiplicativity of the counit
    for (i64 x = 0; x < B && ax.ok; ++x)
      for (i64 y = 0; y < B; ++y) {
        const int xy = T.mul[x * B + y];
        const i64 lhs = xy < 0 ? 0 : T.eps[xy];
        const i64 rhs = static_cast<i64>(T.eps[x]) * T.eps[y];
        if (((lhs - rhs) % p + p) % p != 0) {
          ax.ok = false;
          ax.failure = "(" + dbi_str(T.at(x)) + ", " + dbi_str(T.at(y)) + ")";
          break;
        }
      }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "comultiplication is an algebra map";
    ax.instances = B * B + 1;
    MinIndex bad;
#pragma omp parallel for schedule(static)
    for (i64 x = 0; x < B; ++x)
      for (i64 y = 0; y < B; ++y) {
        Counts l, r;
        const int xy = T.mul[x * B + y];
        if (xy >= 0)
          for (const auto& [u, v] : T.comul[xy]) ++l[static_cast<i64>(u) * B + v];
        for (const auto& [u1, u2] : T.comul[x])
          for (const auto& [v1, v2] : T.comul[y]) {
            const int a = T.mul[static_cast<i64>(u1) * B + v1];
            if (a < 0) continue;
            const int b = T.mul[static_cast<i64>(u2) * B + v2];
            if (b < 0) continue;
            ++r[static_cast<i64>(a) * B + b];
          }
        if (reduced(l, p) != reduced(r, p)) bad.offer(x * B + y);
      }
    if (bad.hit()) {
      const i64 idx = bad.v.load();
      ax.ok = false;
      ax.failure = "(" + dbi_str(T.at(idx / B)) + ", " + dbi_str(T.at(idx % B)) + ")";
    } else {
      // the coproduct of the unit is unit (x) unit
      Counts l, r;
      for (const int u : T.unit_ids)
        for (const auto& [s, t] : T.comul[u]) ++l[static_cast<i64>(s) * B + t];
      for (const int u : T.unit_ids)
        for (const int v : T.unit_ids) ++r[static_cast<i64>(u) * B + v];
      if (reduced(l, p) != reduced(r, p)) {
        ax.ok = false;
        ax.failure = "coproduct of the unit";
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "antipode convolution";
    ax.instances = 2 * B;
    for (i64 x = 0; x < B && ax.ok; ++x) {
      Counts l, r, want;
      if (T.eps[x])
        for (const int u : T.unit_ids) ++want[u];
      for (const auto& [u, v] : T.comul[x]) {
        const int lu = T.mul[static_cast<i64>(T.anti[u]) * B + v];
        if (lu >= 0) ++l[lu];
        const int rv = T.mul[static_cast<i64>(u) * B + T.anti[v]];
        if (rv >= 0) ++r[rv];
      }
      if (reduced(l, p) != reduced(want, p) || reduced(r, p) != reduced(want, p)) {
        ax.ok = false;
        ax.failure = dbi_str(T.at(x));
      }
    }
    report.axioms.push_back(std::move(ax));
  }

  {
    AxiomCheck ax;
    ax.name = "antipode is an involution";
    ax.instances = B;
    for (i64 x = 0; x < B && ax.ok; ++x)
      if (T.anti[T.anti[x]] != x) {
        ax.ok = false;
        ax.failure = dbi_str(T.at(x));
      }
    report.axioms.push_back(std::move(ax));
  }

  for (const AxiomCheck& ax : report.axioms) report.ok = report.ok && ax.ok;
  return report;
}

CheckReport yd_check(const YDModule& M) {
  CheckReport out;
  const i64 n = M.rep.G->n;
  if (M.rep.G->size() != 2 * n) {
    out.ok = false;
    out.failure = "module group is not the full dihedral group";
    return out;
  }
  if (static_cast<int>(M.grading.size()) != M.rep.degree) {
    out.ok = false;
    out.failure = "grading length differs from the degree";
    return out;
  }
  for (size_t k = 0; k < M.rep.G->gens.size(); ++k) {
    const GroupElem h = M.rep.G->gens[k];
    const Matrix& A = M.rep.gen_images[k];
    for (int c = 0; c < A.cols(); ++c) {
      const GroupElem target = gconj(n, h, M.grading[c]);
      for (int r = 0; r < A.rows(); ++r) {
        if (M.rep.F->is_zero(A.at(r, c))) continue;
        if (!(M.grading[r] == target)) {
          out.ok = false;
          out.failure = "generator " + elem_to_string(h) + " sends a degree-" +
                        elem_to_string(M.grading[c]) + " vector onto degree " +
                        elem_to_string(M.grading[r]) + " (expected " +
                        elem_to_string(target) + ")";
          return out;
        }
      }
    }
  }
  return out;
}

Grp centralizer_group(i64 n, const GroupElem& g) {
  switch (centralizer_kind(n, g)) {
    case CentralizerKind::whole_group:
      return dihedral_group(n);
    case CentralizerKind::rotation_group:
      return rotation_group(n);
    case CentralizerKind::klein_four:
      return klein_group(n, g);
    case CentralizerKind::reflection_pair:
      return reflection_group(n, g);
  }
  throw std::logic_error("centralizer_group: unreachable");
}

YDModule induce_yd(const GroupElem& g_C, const Representation& N) {
  const i64 n = N.G->n;
  if (!(N.G->elems == centralizer(n, g_C)))
    throw std::invalid_argument(
        "induce_yd: module group is not the centralizer of the chosen element");
  YDModule M;
  M.rep = induce(N);
  for (const GroupElem& x : coset_representatives(n, N.G->elems)) {
    const GroupElem deg = gconj(n, x, g_C);
    for (int k = 0; k < N.degree; ++k) M.grading.push_back(deg);
  }
  const CheckReport chk = yd_check(M);
  if (!chk.ok) throw std::logic_error("induce_yd: " + chk.failure);
  return M;
}

Matrix double_action(const YDModule& M, const DoubleBasisIndex& x) {
  const Matrix A = image(M.rep, x.h);
  Matrix out(M.rep.F, A.rows(), A.cols());
  for (int r = 0; r < A.rows(); ++r) {
    if (!(M.grading[r] == x.g)) continue;
    for (int c = 0; c < A.cols(); ++c) out.set(r, c, A.at(r, c));
  }
  return out;
}

CheckReport verify_double_module(const YDModule& M) {
  CheckReport out = yd_check(M);
  if (!out.ok) return out;
  const i64 n = M.rep.G->n;
  const Fq& F = M.rep.F;
  const int d = M.rep.degree;
  const i64 tn = 2 * n;

  // all 4n^2 action matrices; element list index equals the id scheme
  const auto imgs = all_images(M.rep);
  const auto els = all_elements(n);
  std::vector<Matrix> act;
  act.reserve(static_cast<size_t>(tn * tn));
  for (i64 gi = 0; gi < tn; ++gi)
    for (i64 hi = 0; hi < tn; ++hi) {
      Matrix A(F, d, d);
      for (int r = 0; r < d; ++r) {
        if (!(M.grading[r] == els[gi])) continue;
        for (int c = 0; c < d; ++c) A.set(r, c, imgs[hi].at(r, c));
      }
      act.push_back(std::move(A));
    }

  Matrix unit_sum(F, d, d);
  for (i64 gi = 0; gi < tn; ++gi) unit_sum = unit_sum + act[gi * tn + 0];
  if (!unit_sum.is_identity()) {
    out.ok = false;
    out.failure = "the unit does not act as the identity";
    return out;
  }

  const Matrix zero(F, d, d);
  const i64 pairs = tn * tn * tn * tn;
  MinIndex bad;
#pragma omp parallel for schedule(static)
  for (i64 idx = 0; idx < pairs; ++idx) {
    const i64 x = idx / (tn * tn), y = idx % (tn * tn);
    const DoubleBasisIndex bx{els[x / tn], els[x % tn]};
    const DoubleBasisIndex by{els[y / tn], els[y % tn]};
    const auto pr = double_multiply(n, bx, by);
    const Matrix& want = pr ? act[static_cast<i64>(elem_id(n, pr->g)) * tn +
                                  elem_id(n, pr->h)]
                            : zero;
    if (!(act[x] * act[y] == want)) bad.offer(idx);
  }
  if (bad.hit()) {
    const i64 idx = bad.v.load();
    const i64 x = idx / (tn * tn), y = idx % (tn * tn);
    const DoubleBasisIndex bx{els[x / tn], els[x % tn]};
    const DoubleBasisIndex by{els[y / tn], els[y % tn]};
    out.ok = false;
    out.failure = "module axiom fails at (" + dbi_str(bx) + ", " + dbi_str(by) + ")";
  }
  return out;
}

std::vector<std::pair<GroupElem, YDModule>> grading_decompose(const YDModule& M) {
  const CheckReport pre = yd_check(M);
  if (!pre.ok) throw std::invalid_argument("grading_decompose: " + pre.failure);
  const i64 n = M.rep.G->n;
  std::vector<std::pair<GroupElem, YDModule>> out;
  for (const ConjClass& C : conjugacy_classes(n)) {
    std::vector<int> sel;
    for (int i = 0; i < M.rep.degree; ++i)
      if (std::find(C.members.begin(), C.members.end(), M.grading[i]) != C.members.end())
        sel.push_back(i);
    if (sel.empty()) continue;
    std::vector<Matrix> imgs;
    for (const Matrix& A : M.rep.gen_images) imgs.push_back(A.submatrix(sel, sel));
    YDModule part;
    part.rep = make_rep(M.rep.G, M.rep.F, std::move(imgs), true);
    for (const int i : sel) part.grading.push_back(M.grading[i]);
    out.emplace_back(C.rep, std::move(part));
  }
  return out;
}

std::vector<Matrix> yd_hom_basis(const YDModule& M, const YDModule& N) {
  if (!M.rep.F->same_field(*N.rep.F))
    throw std::invalid_argument("yd_hom_basis: field mismatch");
  if (M.rep.G->n != N.rep.G->n || M.rep.G->gens != N.rep.G->gens)
    throw std::invalid_argument("yd_hom_basis: group mismatch");
  std::vector<std::pair<Matrix, Matrix>> pairs;
  for (size_t k = 0; k < M.rep.gen_images.size(); ++k)
    pairs.emplace_back(M.rep.gen_images[k], N.rep.gen_images[k]);
  std::vector<std::vector<bool>> mask(
      N.rep.degree, std::vector<bool>(M.rep.degree, false));
  for (int r = 0; r < N.rep.degree; ++r)
    for (int c = 0; c < M.rep.degree; ++c)
      if (!(N.grading[r] == M.grading[c])) mask[r][c] = true;
  return commutant_solve(pairs, &mask);
}

Representation extract_centralizer_module(const YDModule& M, const GroupElem& g_C) {
  const i64 n = M.rep.G->n;
  std::vector<int> sel;
  for (int i = 0; i < M.rep.degree; ++i)
    if (M.grading[i] == g_C) sel.push_back(i);
  if (sel.empty())
    throw std::invalid_argument("extract_centralizer_module: empty degree slice");
  std::vector<bool> in_sel(M.rep.degree, false);
  for (const int i : sel) in_sel[i] = true;
  Grp CZ = centralizer_group(n, g_C);
  std::vector<Matrix> imgs;
  for (const GroupElem& h : CZ->gens) {
    const Matrix A = image(M.rep, h);
    for (const int c : sel)
      for (int r = 0; r < M.rep.degree; ++r)
        if (!in_sel[r] && !M.rep.F->is_zero(A.at(r, c)))
          throw std::logic_error("extract_centralizer_module: slice is not stable");
    imgs.push_back(A.submatrix(sel, sel));
  }
  return make_rep(std::move(CZ), M.rep.F, std::move(imgs), true);
}

namespace {

// columns of U live in the degree slice selected by sel; spread them over
// the whole class orbit and return a basis of the resulting submodule
Matrix saturate_slice(const YDModule& M, const std::vector<int>& sel, const Matrix& U) {
  const Fq& F = M.rep.F;
  Matrix emb(F, M.rep.degree, U.cols());
  for (int c = 0; c < U.cols(); ++c)
    for (size_t r = 0; r < sel.size(); ++r) emb.set(sel[r], c, U.at(static_cast<int>(r), c));
  const auto cz = centralizer(M.rep.G->n, M.grading[sel[0]]);
  bool first = true;
  Matrix joined = emb;
  for (const GroupElem& x : coset_representatives(M.rep.G->n, cz)) {
    const Matrix shifted = image(M.rep, x) * emb;
    if (first) {
      joined = shifted;
      first = false;
    } else {
      joined = horizontal_join(joined, shifted);
    }
  }
  return column_space_basis(joined);
}

}  // namespace

IndecompCertificate yd_indecomposable(const YDModule& M, Rng& rng) {
  const CheckReport pre = yd_check(M);
  if (!pre.ok) throw std::invalid_argument("yd_indecomposable: " + pre.failure);
  if (M.rep.degree == 0)
    throw std::invalid_argument("yd_indecomposable: zero module");
  const auto parts = grading_decompose(M);
  IndecompCertificate cert;
  if (parts.size() > 1) {
    // components over distinct conjugacy classes are complementary submodules
    const i64 n = M.rep.G->n;
    const auto classes = conjugacy_classes(n);
    const auto& first_members = [&]() -> const std::vector<GroupElem>& {
      for (const ConjClass& C : classes)
        if (C.rep == parts[0].first) return C.members;
      throw std::logic_error("yd_indecomposable: lost conjugacy class");
    }();
    std::vector<int> a, b;
    for (int i = 0; i < M.rep.degree; ++i) {
      const bool inside = std::find(first_members.begin(), first_members.end(),
                                    M.grading[i]) != first_members.end();
      (inside ? a : b).push_back(i);
    }
    Matrix A(M.rep.F, M.rep.degree, static_cast<int>(a.size()));
    Matrix B(M.rep.F, M.rep.degree, static_cast<int>(b.size()));
    for (size_t c = 0; c < a.size(); ++c) A.set(a[c], static_cast<int>(c), M.rep.F->one());
    for (size_t c = 0; c < b.size(); ++c) B.set(b[c], static_cast<int>(c), M.rep.F->one());
    cert.status = IndecompCertificate::Status::decomposed;
    cert.summands = {std::move(A), std::move(B)};
    cert.detail = "grading spreads over several conjugacy classes";
    return cert;
  }

  const GroupElem g_C = parts[0].first;
  const auto E = yd_hom_basis(M, M);
  IndecompCertificate ca = certificate_over_end(M.rep.F, M.rep.degree, E, rng);
  const Representation slice = extract_centralizer_module(M, g_C);
  const IndecompCertificate cb = indecomposability_certificate(slice, rng);

  const auto is_cert = [](const IndecompCertificate& c) {
    return c.status == IndecompCertificate::Status::certified;
  };
  const auto is_dec = [](const IndecompCertificate& c) {
    return c.status == IndecompCertificate::Status::decomposed;
  };
  if ((is_cert(ca) && is_dec(cb)) || (is_dec(ca) && is_cert(cb)))
    throw std::logic_error(
        "yd_indecomposable: masked endomorphism certificate and centralizer "
        "slice certificate contradict each other");

  if (is_cert(ca) || is_dec(ca)) {
    ca.detail += "; centralizer slice: " + cb.detail;
    return ca;
  }
  if (is_cert(cb)) {
    ca.status = IndecompCertificate::Status::certified;
    ca.detail = "certified through the centralizer slice (" + cb.detail + ")";
    return ca;
  }
  if (is_dec(cb)) {
    // translate the slice split across the class orbit
    std::vector<int> sel;
    for (int i = 0; i < M.rep.degree; ++i)
      if (M.grading[i] == g_C) sel.push_back(i);
    Matrix A = saturate_slice(M, sel, cb.summands->first);
    Matrix B = saturate_slice(M, sel, cb.summands->second);
    if (A.cols() + B.cols() != M.rep.degree)
      throw std::logic_error("yd_indecomposable: saturated split is not complementary");
    cert = ca;
    cert.status = IndecompCertificate::Status::decomposed;
    cert.summands = {std::move(A), std::move(B)};
    cert.detail = "split lifted from the centralizer slice";
    return cert;
  }
  ca.detail += "; centralizer slice also inconclusive";
  return ca;
}

YDModule yd_sub_module(const YDModule& M, const Matrix& B) {
  const Fq& F = M.rep.F;
  std::vector<GroupElem> degs;
  for (const GroupElem& g : M.grading)
    if (std::find(degs.begin(), degs.end(), g) == degs.end()) degs.push_back(g);

  Matrix joined(F, M.rep.degree, 0);
  bool have = false;
  std::vector<GroupElem> grading;
  for (const GroupElem& g : degs) {
    Matrix Bg = B;
    for (int r = 0; r < B.rows(); ++r) {
      if (M.grading[r] == g) continue;
      for (int c = 0; c < B.cols(); ++c) Bg.set(r, c, F->zero());
    }
    const Matrix Cg = column_space_basis(Bg);
    if (Cg.cols() == 0) continue;
    joined = have ? horizontal_join(joined, Cg) : Cg;
    have = true;
    for (int c = 0; c < Cg.cols(); ++c) grading.push_back(g);
  }
  if (joined.cols() != B.cols())
    throw std::logic_error("yd_sub_module: subspace does not split along the grading");

  std::vector<Matrix> imgs;
  for (const Matrix& A : M.rep.gen_images)
    imgs.push_back(restrict_to_column_span(A, joined));
  YDModule out;
  out.rep = make_rep(M.rep.G, F, std::move(imgs), true);
  out.grading = std::move(grading);
  const CheckReport chk = yd_check(out);
  if (!chk.ok) throw std::logic_error("yd_sub_module: " + chk.failure);
  return out;
}

YDModule yd_direct_sum(const YDModule& A, const YDModule& B) {
  YDModule out;
  out.rep = direct_sum(A.rep, B.rep);
  out.grading = A.grading;
  out.grading.insert(out.grading.end(), B.grading.begin(), B.grading.end());
  return out;
}

namespace {

void yd_ks_recurse(const YDModule& M, Rng& rng, std::vector<YDModule>* out,
                   bool* all_certified) {
  if (M.rep.degree == 0) return;
  const auto parts = grading_decompose(M);
  if (parts.size() > 1) {
    for (const auto& [cls, part] : parts) yd_ks_recurse(part, rng, out, all_certified);
    return;
  }
  const auto cert = yd_indecomposable(M, rng);
  switch (cert.status) {
    case IndecompCertificate::Status::certified:
      out->push_back(M);
      return;
    case IndecompCertificate::Status::inconclusive:
      out->push_back(M);
      if (all_certified) *all_certified = false;
      return;
    case IndecompCertificate::Status::decomposed:
      yd_ks_recurse(yd_sub_module(M, cert.summands->first), rng, out, all_certified);
      yd_ks_recurse(yd_sub_module(M, cert.summands->second), rng, out, all_certified);
      return;
  }
}

}  // namespace

std::vector<YDModule> yd_krull_schmidt(const YDModule& M, Rng& rng, bool* all_certified) {
  if (all_certified) *all_certified = true;
  std::vector<YDModule> out;
  yd_ks_recurse(M, rng, &out, all_certified);
  return out;
}

IsoResult yd_isomorphic(const YDModule& M, const YDModule& N, Rng& rng) {
  IsoResult out;
  if (!M.rep.F->same_field(*N.rep.F))
    throw std::invalid_argument("yd_isomorphic: field mismatch");
  if (M.rep.G->n != N.rep.G->n || M.rep.G->gens != N.rep.G->gens)
    throw std::invalid_argument("yd_isomorphic: group mismatch");
  const CheckReport cm = yd_check(M);
  const CheckReport cn = yd_check(N);
  if (!cm.ok || !cn.ok)
    throw std::invalid_argument("yd_isomorphic: input fails the grading check");
  if (M.rep.degree != N.rep.degree) {
    out.certified = true;
    out.detail = "degrees differ";
    return out;
  }
  {
    const i64 n = M.rep.G->n;
    std::vector<int> dm(2 * n, 0), dn(2 * n, 0);
    for (const GroupElem& g : M.grading) ++dm[elem_id(n, g)];
    for (const GroupElem& g : N.grading) ++dn[elem_id(n, g)];
    if (dm != dn) {
      out.certified = true;
      out.detail = "graded dimensions differ";
      return out;
    }
  }
  for (size_t k = 0; k < M.rep.gen_images.size(); ++k)
    if (!(char_poly(M.rep.gen_images[k]) == char_poly(N.rep.gen_images[k]))) {
      out.certified = true;
      out.detail = "generator characteristic polynomials differ";
      return out;
    }

  const auto H = yd_hom_basis(M, N);
  if (H.empty()) {
    out.certified = true;
    out.detail = "graded intertwiner space is zero";
    return out;
  }

  const auto accept = [&](Matrix S) {
    for (size_t k = 0; k < M.rep.gen_images.size(); ++k)
      if (!(N.rep.gen_images[k] * S == S * M.rep.gen_images[k]))
        throw std::logic_error("yd_isomorphic: witness fails exact re-check");
    for (int r = 0; r < S.rows(); ++r)
      for (int c = 0; c < S.cols(); ++c)
        if (!(N.grading[r] == M.grading[c]) && !M.rep.F->is_zero(S.at(r, c)))
          throw std::logic_error("yd_isomorphic: witness does not preserve the grading");
    out.isomorphic = true;
    out.certified = true;
    out.witness = std::move(S);
    out.detail = "invertible graded intertwiner";
  };

  for (const Matrix& S : H)
    if (rank(S) == M.rep.degree) {
      accept(S);
      return out;
    }
  if (H.size() == 1) {
    out.certified = true;
    out.detail = "graded intertwiner space is one singular line";
    return out;
  }

  const auto ca = yd_indecomposable(M, rng);
  const auto cb = yd_indecomposable(N, rng);
  if (ca.status == IndecompCertificate::Status::certified &&
      cb.status == IndecompCertificate::Status::certified) {
    out.certified = true;
    out.detail =
        "both modules have local graded endomorphism rings and no basis "
        "intertwiner is invertible";
    return out;
  }

  for (int trial = 0; trial < 64; ++trial) {
    Matrix S(M.rep.F, N.rep.degree, M.rep.degree);
    for (const Matrix& Bs : H) S = S + Bs.scalar_mul(M.rep.F->random(rng));
    if (rank(S) == M.rep.degree) {
      accept(std::move(S));
      return out;
    }
  }

  double combos = 1;
  for (size_t i = 0; i < H.size() && combos <= (1 << 16); ++i)
    combos *= static_cast<double>(M.rep.F->order());
  if (combos <= (1 << 16)) {
    std::vector<i64> codes(H.size(), 0);
    for (;;) {
      size_t at = 0;
      while (at < codes.size() && codes[at] + 1 == M.rep.F->order()) codes[at++] = 0;
      if (at == codes.size()) break;
      ++codes[at];
      Matrix S(M.rep.F, N.rep.degree, M.rep.degree);
      for (size_t i = 0; i < H.size(); ++i)
        if (codes[i]) S = S + H[i].scalar_mul(M.rep.F->from_code(codes[i]));
      if (rank(S) == M.rep.degree) {
        accept(std::move(S));
        return out;
      }
    }
    out.certified = true;
    out.detail = "no invertible graded intertwiner (exhaustive search)";
    return out;
  }

  out.certified = false;
  out.detail = "no invertible graded intertwiner found by sampling";
  return out;
}

bool generates_from_every_basis_vector(const YDModule& M) {
  const Fq& F = M.rep.F;
  const int d = M.rep.degree;
  const auto imgs = all_images(M.rep);
  std::vector<GroupElem> degs;
  for (const GroupElem& g : M.grading)
    if (std::find(degs.begin(), degs.end(), g) == degs.end()) degs.push_back(g);
  for (int k = 0; k < d; ++k) {
    Matrix W(F, d, static_cast<int>(imgs.size() * degs.size()));
    int col = 0;
    for (const Matrix& A : imgs)
      for (const GroupElem& g : degs) {
        for (int r = 0; r < d; ++r)
          if (M.grading[r] == g) W.set(r, col, A.at(r, k));
        ++col;
      }
    if (rank(W) != d) return false;
  }
  return true;
}

}  // namespace qdd
