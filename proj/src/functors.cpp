#include "hopfcat/functors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hopfcat {

namespace {

CheckResult simple_check(std::string name, bool pass, std::size_t items,
                         std::string witness = "", std::string details = "") {
  return CheckResult{std::move(name), pass, items, std::move(witness), std::move(details)};
}

SparseMatrix column_matrix(const HopfPresentation& h, const std::vector<Element>& cols) {
  std::vector<MatrixEntry> entries;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c].terms())
      entries.push_back({static_cast<int>(r), static_cast<int>(c), v});
  return SparseMatrix::from_entries(static_cast<int>(h.dim()),
                                    static_cast<int>(cols.size()), std::move(entries));
}

std::optional<DenseVec> coords_in(const SparseMatrix& colmat, const Element& v,
                                  ExecMode mode) {
  DenseVec rhs(colmat.rows(), Rational(0));
  for (const auto& [i, c] : v.terms()) rhs[i] = c;
  return solve(colmat, rhs, mode);
}

}  // namespace

GrouplikeSet grouplikes(const HopfPresentation::Ptr& h, ExecMode mode) {
  GrouplikeSet out;
  const HopfPresentation& H = *h;
  Verdict& v = out.certification;
  v.degree = H.degree_bound();
  const std::uint32_t n0 = H.dim_upto(0);

  auto fails = collect_failures(n0, mode, [&](std::size_t i) -> std::optional<std::string> {
    const auto idx = static_cast<std::uint32_t>(i);
    Element e = H.basis_element(idx);
    if (!(H.delta_basis(idx) == Tensor2::pure(e, e)))
      return H.basis_label(idx) + ": Delta(v) != v (x) v";
    if (!(H.counit_basis(idx) == Rational(1)))
      return H.basis_label(idx) + ": eps(v) = " + to_string(H.counit_basis(idx));
    return std::nullopt;
  });
  const bool basis_grouplike = fails.empty();
  v.add(simple_check("degree-zero basis is grouplike", basis_grouplike, n0,
                     basis_grouplike ? "" : fails.front().second));
  v.add(simple_check(
      "completeness", basis_grouplike, 1, "",
      basis_grouplike
          ? "comultiplication is filtration-compatible, so grouplikes are supported in "
            "degree 0; their coefficients there are orthogonal idempotents summing to 1 "
            "under the counit, which forces exactly the degree-0 basis vectors"
          : "some degree-0 basis vector is not grouplike; the coefficient argument does "
            "not apply and the returned list is only a verified subset"));

  std::set<std::size_t> bad;
  for (const auto& [i, note] : fails) bad.insert(i);
  std::vector<std::uint32_t> picked;
  for (std::uint32_t i = 0; i < n0; ++i)
    if (!bad.count(i)) picked.push_back(i);

  std::set<std::string> used;
  for (std::uint32_t i : picked) {
    out.elements.push_back(H.basis_element(i));
    std::string label;
    switch (H.kind()) {
      case HopfKind::GroupAlgebra:
      case HopfKind::Smash: label = H.group().label(H.basis_key(i).group); break;
      case HopfKind::Enveloping: label = "e"; break;
      case HopfKind::StructureConstants: label = H.basis_label(i); break;
    }
    if (!used.insert(label).second) label = H.basis_label(i);
    out.labels.push_back(std::move(label));
  }

  /* Multiplication table on the list; any product escaping it breaks closure. */
  const std::uint32_t m = static_cast<std::uint32_t>(out.elements.size());
  std::vector<std::vector<std::uint32_t>> table(m, std::vector<std::uint32_t>(m, 0));
  std::string closure_witness;
  bool closed = m > 0;
  for (std::uint32_t a = 0; a < m && closed; ++a)
    for (std::uint32_t b = 0; b < m && closed; ++b) {
      Element prod = H.multiply(out.elements[a], out.elements[b]);
      auto it = std::find(out.elements.begin(), out.elements.end(), prod);
      if (it == out.elements.end()) {
        closed = false;
        closure_witness = out.labels[a] + " * " + out.labels[b] + " = " + prod.str();
      } else {
        table[a][b] = static_cast<std::uint32_t>(it - out.elements.begin());
      }
    }
  v.add(simple_check("closed under multiplication", closed,
                     static_cast<std::size_t>(m) * m, closure_witness));
  if (closed) {
    try {
      out.group = FiniteGroup::from_table(out.labels, table);
      out.forms_group = true;
      v.add(simple_check("forms a group", true, 1));
    } catch (const ValidationError& e) {
      v.add(simple_check("forms a group", false, 1, e.what()));
    }
  } else {
    v.add(simple_check("forms a group", false, 1, "not closed under multiplication"));
  }

  if (H.declared_grouplikes()) {
    std::set<std::uint32_t> declared(H.declared_grouplikes()->begin(),
                                     H.declared_grouplikes()->end());
    std::set<std::uint32_t> found(picked.begin(), picked.end());
    v.add(simple_check("matches the declared grouplikes", declared == found,
                       declared.size(),
                       declared == found ? ""
                                         : "computed set differs from the declaration"));
  }
  return out;
}

PrimitiveSpace primitives(const HopfPresentation::Ptr& h, ExecMode mode) {
  PrimitiveSpace out;
  const HopfPresentation& H = *h;
  Verdict& v = out.certification;
  v.degree = H.degree_bound();
  const std::uint32_t n = H.dim();

  /* Nullspace of v -> Delta(v) - v (x) 1 - 1 (x) v over the pair space. */
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::map<std::uint32_t, Rational>> eq;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> acc;
    for (const auto& [ab, c] : H.delta_basis(i).terms()) acc[ab] += c;
    for (const auto& [j, uj] : H.one().terms()) {
      acc[{i, j}] -= uj;
      acc[{j, i}] -= uj;
    }
    for (const auto& [key, c] : acc)
      if (!is_zero(c)) eq[key][i] = c;
  }
  std::vector<MatrixEntry> entries;
  int row = 0;
  for (const auto& [key, cols] : eq) {
    for (const auto& [cidx, c] : cols)
      entries.push_back({row, static_cast<int>(cidx), c});
    ++row;
  }
  auto kernel = nullspace(SparseMatrix::from_entries(row, static_cast<int>(n),
                                                     std::move(entries)),
                          mode);
  std::vector<SparseRow> rows;
  for (const auto& vec : kernel) {
    SparseRow r;
    for (std::size_t i = 0; i < vec.size(); ++i)
      if (!is_zero(vec[i])) r.push_back({static_cast<int>(i), vec[i]});
    rows.push_back(std::move(r));
  }
  for (const auto& r : canonical_span(rows, static_cast<int>(n))) {
    Element e(h.get());
    for (const auto& [i, c] : r) e.add_scaled(static_cast<std::uint32_t>(i), c);
    out.basis.push_back(std::move(e));
  }
  const std::size_t m = out.basis.size();
  v.add(simple_check("primitive space computed", true, n, "",
                     "dimension " + std::to_string(m)));

  /* Labels: reuse generator labels when a primitive is exactly a letter. */
  std::set<std::string> used;
  for (std::size_t k = 0; k < m; ++k) {
    std::string label;
    const auto& terms = out.basis[k].terms();
    if (terms.size() == 1 && terms.begin()->second == Rational(1)) {
      const std::uint32_t idx = terms.begin()->first;
      const BasisKey& key = H.basis_key(idx);
      if ((H.kind() == HopfKind::Enveloping || H.kind() == HopfKind::Smash) &&
          monomial_degree(key.exps) == 1 &&
          (H.kind() == HopfKind::Enveloping || key.group == H.group().identity())) {
        std::uint32_t letter = 0;
        while (key.exps[letter] == 0) ++letter;
        label = H.lie().label(letter);
      } else {
        label = H.basis_label(idx);
      }
    }
    if (label.empty() || used.count(label)) label = "p" + std::to_string(k + 1);
    used.insert(label);
    out.labels.push_back(std::move(label));
  }

  /* Bracket closure: [p, q] = pq - qp expressed back in the basis. */
  SparseMatrix colmat = column_matrix(H, out.basis);
  std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb> brackets;
  bool closed = true;
  std::string witness;
  for (std::size_t a = 0; a < m && closed; ++a)
    for (std::size_t b = a + 1; b < m && closed; ++b) {
      if (out.basis[a].degree() + out.basis[b].degree() > H.degree_bound()) {
        closed = false;
        witness = "[" + out.labels[a] + ", " + out.labels[b] +
                  "] is not computable within the truncation degree";
        break;
      }
      Element br = H.multiply(out.basis[a], out.basis[b]) -
                   H.multiply(out.basis[b], out.basis[a]);
      auto coords = coords_in(colmat, br, mode);
      if (!coords) {
        closed = false;
        witness = "[" + out.labels[a] + ", " + out.labels[b] + "] = " + br.str() +
                  " lies outside the primitive space";
        break;
      }
      LinComb lc;
      for (std::size_t t = 0; t < coords->size(); ++t)
        if (!is_zero((*coords)[t])) lc.push_back({static_cast<std::uint32_t>(t), (*coords)[t]});
      if (!lc.empty())
        brackets[{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}] =
            std::move(lc);
    }
  v.add(simple_check("closed under the bracket", closed, m * m, witness));
  if (closed) {
    try {
      out.lie = LieAlgebra::make(out.labels, brackets);
      v.add(simple_check("bracket satisfies the Lie axioms", true, 1));
    } catch (const ValidationError& e) {
      v.add(simple_check("bracket satisfies the Lie axioms", false, 1, e.what()));
    }
  } else {
    v.add(simple_check("bracket satisfies the Lie axioms", false, 1,
                       "bracket does not close on the primitive space"));
  }
  return out;
}

Decomposition decompose(const HopfPresentation::Ptr& h, ExecMode mode) {
  const HopfPresentation& H = *h;
  const int d = H.degree_bound();

  GrouplikeSet gset = grouplikes(h, mode);
  PrimitiveSpace pspace = primitives(h, mode);
  Verdict verdict;
  verdict.degree = d;
  verdict.merge(gset.certification, "grouplikes: ");
  verdict.merge(pspace.certification, "primitives: ");
  if (!gset.forms_group)
    throw ValidationError("cannot decompose '" + H.name() +
                          "': grouplikes do not form a group (" +
                          verdict.first_failure() + ")");
  if (!verdict.pass)
    throw ValidationError("cannot decompose '" + H.name() + "': " +
                          verdict.first_failure());

  auto group_part = HopfPresentation::group_algebra(gset.group, d, H.name() + ".G");
  auto prim_part = HopfPresentation::enveloping(pspace.lie, d, H.name() + ".P");

  /* Conjugation action of the grouplikes on the primitive space. */
  SparseMatrix colmat = column_matrix(H, pspace.basis);
  std::map<std::uint32_t, std::vector<LinComb>> rho;
  for (std::uint32_t g = 0; g < gset.group.size(); ++g) {
    if (g == gset.group.identity()) continue;
    std::vector<LinComb> cols;
    for (std::size_t j = 0; j < pspace.basis.size(); ++j) {
      Element conj = H.multiply(H.multiply(gset.elements[g], pspace.basis[j]),
                                H.antipode(gset.elements[g]));
      auto coords = coords_in(colmat, conj, mode);
      if (!coords)
        throw ValidationError("conjugate of a primitive by '" + gset.labels[g] +
                              "' is not primitive in '" + H.name() + "'");
      LinComb lc;
      for (std::size_t t = 0; t < coords->size(); ++t)
        if (!is_zero((*coords)[t]))
          lc.push_back({static_cast<std::uint32_t>(t), (*coords)[t]});
      cols.push_back(std::move(lc));
    }
    rho[g] = std::move(cols);
  }
  auto smash_model = HopfPresentation::smash(
      HopfAction::make(gset.group, pspace.lie, std::move(rho)), d, H.name() + ".model");

  /* Comparison map: multiply the primitive leg against the grouplike leg. */
  std::vector<Element> h_images(smash_model->dim());
  std::map<Monomial, Element> mono_img;
  mono_img[Monomial(pspace.lie.dim(), 0)] = H.one();
  for (std::uint32_t i = 0; i < smash_model->dim(); ++i) {
    const BasisKey& key = smash_model->basis_key(i);
    auto it = mono_img.find(key.exps);
    if (it == mono_img.end()) {
      Monomial rest = key.exps;
      std::uint32_t letter = 0;
      while (rest[letter] == 0) ++letter;
      --rest[letter];
      Element img = H.multiply(pspace.basis[letter], mono_img.at(rest));
      it = mono_img.emplace(key.exps, std::move(img)).first;
    }
    h_images[i] = H.multiply(it->second, gset.elements[key.group]);
  }
  HopfMorphism comparison =
      HopfMorphism::from_basis_images(smash_model, h, std::move(h_images), "h");
  verdict.merge(comparison.validate(mode), "comparison: ");

  MorphismAnalysis an = analyze(comparison, mode);
  bool level_bijective = true;
  std::string profile;
  for (int k = 0; k <= d; ++k) {
    level_bijective = level_bijective && an.rank[k] == an.source_dim[k] &&
                      an.rank[k] == an.target_dim[k];
    profile += (k ? ", " : "") + std::to_string(an.rank[k]) + "/" +
               std::to_string(an.target_dim[k]);
  }
  verdict.add(simple_check("comparison bijective on every filtration level",
                           level_bijective, static_cast<std::size_t>(d) + 1,
                           level_bijective ? "" : "rank profile " + profile,
                           "rank/dim by degree: " + profile));

  /* Canonical legs of the split sequence through the comparison map. */
  std::map<std::string, Element> i1_images, i2_images, p2_images;
  for (std::uint32_t l = 0; l < pspace.lie.dim(); ++l) {
    Monomial single(pspace.lie.dim(), 0);
    single[l] = 1;
    i1_images[pspace.lie.label(l)] = smash_model->basis_element(
        *smash_model->find_basis(BasisKey{single, gset.group.identity()}));
    p2_images[pspace.lie.label(l)] = group_part->zero();
  }
  for (std::uint32_t g = 0; g < gset.group.size(); ++g) {
    if (g == gset.group.identity()) continue;
    i2_images[gset.group.label(g)] = smash_model->basis_element(
        *smash_model->find_basis(BasisKey{Monomial(pspace.lie.dim(), 0), g}));
    p2_images[gset.group.label(g)] = group_part->basis_element(g);
  }
  HopfMorphism i1 = HopfMorphism::from_generators(prim_part, smash_model, i1_images,
                                                  ValidatePolicy::Strict, "i1");
  HopfMorphism i2 = HopfMorphism::from_generators(group_part, smash_model, i2_images,
                                                  ValidatePolicy::Strict, "i2");
  HopfMorphism p2 = HopfMorphism::from_generators(smash_model, group_part, p2_images,
                                                  ValidatePolicy::Strict, "p2");

  auto minv = inverse(comparison.matrix_upto(d), mode);
  if (!minv)
    throw ValidationError("comparison map for '" + H.name() +
                          "' is singular; no retraction exists");
  std::vector<Element> inv_images(H.dim());
  for (std::uint32_t c = 0; c < H.dim(); ++c) inv_images[c] = smash_model->zero();
  for (const auto& e : minv->entries())
    inv_images[e.col].add_scaled(static_cast<std::uint32_t>(e.row), e.value);
  HopfMorphism h_inv =
      HopfMorphism::from_basis_images(h, smash_model, std::move(inv_images), "h_inv");

  HopfMorphism inc = compose(comparison, i1);
  HopfMorphism sec = compose(comparison, i2);
  HopfMorphism ret = compose(p2, h_inv);

  verdict.merge(ret.validate(mode), "retraction: ");
  verdict.add(simple_check("retraction composes with the section to the identity",
                           compose(ret, sec) == HopfMorphism::identity(group_part), 1));
  verdict.add(simple_check("retraction factors through the comparison",
                           compose(ret, comparison) == p2, 1));

  return Decomposition{std::move(prim_part), std::move(group_part),
                       std::move(smash_model), std::move(comparison), std::move(inc),
                       std::move(sec),        std::move(ret),        std::move(gset),
                       std::move(pspace),     std::move(verdict)};
}

InducedPair induced_pair(const HopfMorphism& f, const Decomposition& src,
                         const Decomposition& dst, ExecMode mode) {
  Verdict v;
  v.degree = f.source()->degree_bound();
  const HopfPresentation& A = *f.source();
  const HopfPresentation& B = *f.target();
  (void)A;

  /* Primitive leg: each source primitive must land in the target primitives. */
  SparseMatrix dst_cols = column_matrix(B, dst.primitive.basis);
  std::map<std::string, Element> prim_images;
  std::string prim_witness;
  std::size_t prim_misses = 0;
  for (std::size_t k = 0; k < src.primitive.basis.size(); ++k) {
    Element img = f.apply(src.primitive.basis[k]);
    auto coords = coords_in(dst_cols, img, mode);
    Element out = dst.prim_part->zero();
    if (!coords) {
      ++prim_misses;
      if (prim_witness.empty())
        prim_witness = "f(" + src.primitive.labels[k] + ") = " + img.str() +
                       " is not primitive in '" + B.name() + "'";
    } else {
      for (std::size_t t = 0; t < coords->size(); ++t) {
        if (is_zero((*coords)[t])) continue;
        Monomial single(dst.primitive.lie.dim(), 0);
        single[t] = 1;
        out.add_scaled(*dst.prim_part->find_basis(BasisKey{single, 0}), (*coords)[t]);
      }
    }
    prim_images[src.primitive.labels[k]] = std::move(out);
  }
  v.add(simple_check("primitives map to primitives", prim_misses == 0,
                     src.primitive.basis.size(), prim_witness));

  /* Grouplike leg: images must match target grouplikes on the nose. */
  std::map<std::string, Element> grp_images;
  std::string grp_witness;
  std::size_t grp_misses = 0;
  for (std::size_t k = 0; k < src.grouplike.elements.size(); ++k) {
    if (static_cast<std::uint32_t>(k) == src.grouplike.group.identity()) continue;
    Element img = f.apply(src.grouplike.elements[k]);
    auto it = std::find(dst.grouplike.elements.begin(), dst.grouplike.elements.end(), img);
    Element out = dst.group_part->one();
    if (it == dst.grouplike.elements.end()) {
      ++grp_misses;
      if (grp_witness.empty())
        grp_witness = "f(" + src.grouplike.labels[k] + ") = " + img.str() +
                      " is not grouplike in '" + B.name() + "'";
    } else {
      out = dst.group_part->basis_element(
          static_cast<std::uint32_t>(it - dst.grouplike.elements.begin()));
    }
    grp_images[src.grouplike.labels[k]] = std::move(out);
  }
  v.add(simple_check("grouplikes map to grouplikes", grp_misses == 0,
                     src.grouplike.elements.size(), grp_witness));

  HopfMorphism prim_map = HopfMorphism::from_generators(
      src.prim_part, dst.prim_part, prim_images, ValidatePolicy::Defer, "P(f)");
  HopfMorphism grp_map = HopfMorphism::from_generators(
      src.group_part, dst.group_part, grp_images, ValidatePolicy::Defer, "G(f)");
  v.merge(prim_map.validate(mode), "primitive part: ");
  v.merge(grp_map.validate(mode), "group part: ");
  return InducedPair{std::move(prim_map), std::move(grp_map), std::move(v)};
}

Verdict zero_morphism_certificate(const HopfPresentation::Ptr& env,
                                  const HopfPresentation::Ptr& grp, ExecMode mode) {
  Verdict v;
  v.degree = env->degree_bound();
  v.add(simple_check("source is primitively generated", env->kind() == HopfKind::Enveloping,
                     1,
                     env->kind() == HopfKind::Enveloping
                         ? ""
                         : "'" + env->name() + "' is a " + kind_name(env->kind()) +
                               " presentation"));
  PrimitiveSpace p = primitives(grp, mode);
  v.add(simple_check("target has no primitives", p.basis.empty(), 1,
                     p.basis.empty() ? ""
                                     : "dim P = " + std::to_string(p.basis.size()),
                     "dim P('" + grp->name() + "') = " + std::to_string(p.basis.size())));
  v.merge(trivial_morphism(env, grp).validate(mode), "trivial map: ");
  v.add(simple_check(
      "uniqueness", v.pass, 1, "",
      "every filtered Hopf map sends each Lie generator to a primitive of the target; "
      "the target has none, so all generators map to zero and the map is the "
      "counit-unit composite"));
  return v;
}

}  // namespace hopfcat
