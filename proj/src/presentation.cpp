#include "hopfcat/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfcat/rational.hpp"

namespace hopfcat {

namespace {

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

void combo_add(PbwCombo& acc, const PbwCombo& inc, const Rational& scale) {
  for (const auto& [m, c] : inc) {
    auto it = acc.find(m);
    if (it == acc.end()) {
      Rational v = c * scale;
      if (!is_zero(v)) acc.emplace(m, std::move(v));
    } else {
      it->second += c * scale;
      if (is_zero(it->second)) acc.erase(it);
    }
  }
}

/* Lift of rho(g) to PBW monomials: apply letterwise, multiply out. Agrees
   with the unique algebra-map extension because rho(g) preserves brackets. */
PbwCombo rho_hat(PbwEngine& engine, const HopfAction& action, std::uint32_t g,
                 const Monomial& m) {
  const std::size_t dim = m.size();
  PbwCombo acc{{Monomial(dim, 0), Rational(1)}};
  for (std::uint32_t letter : engine.word_of(m)) {
    PbwCombo next;
    for (const auto& [t, ct] : action.apply(g, letter)) {
      Monomial single(dim, 0);
      single[t] = 1;
      for (const auto& [mono, c] : acc) combo_add(next, engine.multiply(mono, single), c * ct);
    }
    acc = std::move(next);
  }
  return acc;
}

/* All splits b + (a-b) = a with the product-of-binomials coefficient. */
template <typename Fn>
void for_each_split(const Monomial& a, Fn&& fn) {
  Monomial b(a.size(), 0);
  while (true) {
    Rational coef(1);
    Monomial rest(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      coef *= binomial(a[i], b[i]);
      rest[i] = a[i] - b[i];
    }
    fn(b, rest, coef);
    std::size_t k = 0;
    while (k < a.size() && b[k] == a[k]) b[k++] = 0;
    if (k == a.size()) break;
    ++b[k];
  }
}

std::string monomial_label(const LieAlgebra& lie, const Monomial& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += lie.label(static_cast<std::uint32_t>(i));
    if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string kind_name(HopfKind k) {
  switch (k) {
    case HopfKind::GroupAlgebra: return "group-algebra";
    case HopfKind::Enveloping: return "enveloping";
    case HopfKind::Smash: return "smash";
    case HopfKind::StructureConstants: return "structure-constants";
  }
  return "unknown";
}

bool term_order_less(const BasisKey& a, const BasisKey& b) {
  const int da = monomial_degree(a.exps), db = monomial_degree(b.exps);
  if (da != db) return da < db;
  if (a.group != b.group) return a.group < b.group;
  return a.exps > b.exps;
}

void HopfPresentation::check_degree(int degree) const {
  if (degree < 2)
    throw ValidationError("truncation degree must be at least 2, got " +
                          std::to_string(degree));
}

namespace {

/* index_ and cumulative dimension table; degrees_ must be nondecreasing. */
void finalize_basis(std::map<BasisKey, std::uint32_t, BasisKeyLess>& index,
                    std::vector<std::uint32_t>& dims_upto,
                    const std::vector<BasisKey>& basis, const std::vector<int>& degrees,
                    int degree_bound) {
  for (std::uint32_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  dims_upto.assign(static_cast<std::size_t>(degree_bound) + 1, 0);
  for (int k = 0; k <= degree_bound; ++k)
    dims_upto[k] = static_cast<std::uint32_t>(
        std::upper_bound(degrees.begin(), degrees.end(), k) - degrees.begin());
}

}  // namespace

std::uint32_t HopfPresentation::dim_upto(int k) const {
  if (k < 0) return 0;
  if (k >= degree_) return dim();
  return dims_upto_[k];
}

std::optional<std::uint32_t> HopfPresentation::find_basis(const BasisKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string HopfPresentation::basis_label(std::uint32_t i) const {
  const BasisKey& key = basis_[i];
  switch (kind_) {
    case HopfKind::GroupAlgebra: return group_.label(key.group);
    case HopfKind::Enveloping: return monomial_label(lie_, key.exps);
    case HopfKind::Smash:
      return monomial_label(lie_, key.exps) + "⊗" + group_.label(key.group);
    case HopfKind::StructureConstants: return sc_labels_[key.group];
  }
  return "?";
}

const HopfAction& HopfPresentation::action() const {
  if (!action_)
    throw ValidationError("presentation '" + name_ + "' carries no group action");
  return *action_;
}

const Element& HopfPresentation::mult_basis(std::uint32_t i, std::uint32_t j) const {
  if (degrees_[i] + degrees_[j] > degree_)
    throw TruncationError("product " + basis_label(i) + " * " + basis_label(j) +
                          " exceeds truncation degree " + std::to_string(degree_));
  return mult_.at(pair_key(i, j));
}

namespace {

void require_owner(const HopfPresentation* self, const Element& a) {
  if (a.is_zero() && a.owner() == nullptr) return;
  if (!same_presentation(a.owner(), self))
    throw OwnershipError("element of '" + (a.owner() ? a.owner()->name() : "<none>") +
                         "' used in an operation on '" + self->name() + "'");
}

}  // namespace

Element HopfPresentation::multiply(const Element& a, const Element& b) const {
  require_owner(this, a);
  require_owner(this, b);
  if (a.is_zero() || b.is_zero()) return zero();
  if (a.degree() + b.degree() > degree_)
    throw TruncationError("product of degrees " + std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()) + " exceeds truncation degree " +
                          std::to_string(degree_));
  Element out(this);
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) out.add_scaled(mult_basis(i, j), ci * cj);
  return out;
}

Tensor2 HopfPresentation::comultiply(const Element& a) const {
  require_owner(this, a);
  Tensor2 out(this, this);
  for (const auto& [i, c] : a.terms()) out.add_scaled(delta_[i], c);
  return out;
}

Rational HopfPresentation::counit(const Element& a) const {
  require_owner(this, a);
  Rational out(0);
  for (const auto& [i, c] : a.terms()) out += counit_[i] * c;
  return out;
}

Element HopfPresentation::antipode(const Element& a) const {
  require_owner(this, a);
  Element out(this);
  for (const auto& [i, c] : a.terms()) out.add_scaled(antipode_[i], c);
  return out;
}

Element HopfPresentation::straighten_word(const Word& word) const {
  if (kind_ != HopfKind::Enveloping && kind_ != HopfKind::Smash)
    throw ValidationError("straighten_word requires a PBW basis; '" + name_ + "' is a " +
                          kind_name(kind_) + " presentation");
  Element out = one();
  for (std::uint32_t letter : word) {
    if (letter >= lie_.dim())
      throw ValidationError("word letter " + std::to_string(letter) +
                            " out of range for a Lie algebra of dimension " +
                            std::to_string(lie_.dim()));
    Monomial single(lie_.dim(), 0);
    single[letter] = 1;
    BasisKey key{std::move(single), kind_ == HopfKind::Smash ? group_.identity() : 0};
    out = multiply(out, basis_element(*find_basis(key)));
  }
  return out;
}

void HopfPresentation::enumerate_smash_basis(std::uint32_t lie_dim) {
  auto monos = enumerate_monomials(lie_dim, degree_);
  std::size_t start = 0;
  for (int k = 0; k <= degree_; ++k) {
    std::size_t stop = start;
    while (stop < monos.size() && monomial_degree(monos[stop]) == k) ++stop;
    for (std::uint32_t g = 0; g < group_.size(); ++g)
      for (std::size_t m = start; m < stop; ++m) {
        basis_.push_back(BasisKey{monos[m], g});
        degrees_.push_back(k);
      }
    start = stop;
  }
}

void HopfPresentation::build_generator_list() {
  auto lie_generator = [&](std::uint32_t l) {
    Monomial single(lie_.dim(), 0);
    single[l] = 1;
    BasisKey key{std::move(single),
                 kind_ == HopfKind::Smash ? group_.identity() : 0u};
    return Generator{Generator::Type::Lie, lie_.label(l), l, *find_basis(key)};
  };
  auto group_generator = [&](std::uint32_t g) {
    BasisKey key{Monomial(lie_.dim(), 0), g};
    return Generator{Generator::Type::Group, group_.label(g), g, *find_basis(key)};
  };
  switch (kind_) {
    case HopfKind::GroupAlgebra:
      for (std::uint32_t g = 0; g < group_.size(); ++g)
        if (g != group_.identity()) generators_.push_back(group_generator(g));
      break;
    case HopfKind::Enveloping:
      for (std::uint32_t l = 0; l < lie_.dim(); ++l) generators_.push_back(lie_generator(l));
      break;
    case HopfKind::Smash:
      for (std::uint32_t l = 0; l < lie_.dim(); ++l) generators_.push_back(lie_generator(l));
      for (std::uint32_t g = 0; g < group_.size(); ++g)
        if (g != group_.identity()) generators_.push_back(group_generator(g));
      break;
    case HopfKind::StructureConstants:
      for (std::uint32_t i = 0; i < dim(); ++i)
        generators_.push_back(Generator{Generator::Type::Opaque, sc_labels_[i], i, i});
      break;
  }
}

HopfPresentation::Ptr HopfPresentation::group_algebra(FiniteGroup group, int degree,
                                                      std::string name) {
  auto p = std::shared_ptr<HopfPresentation>(new HopfPresentation());
  p->check_degree(degree);
  p->kind_ = HopfKind::GroupAlgebra;
  p->degree_ = degree;
  p->name_ = std::move(name);
  p->group_ = std::move(group);
  const FiniteGroup& G = p->group_;

  for (std::uint32_t g = 0; g < G.size(); ++g) {
    p->basis_.push_back(BasisKey{{}, g});
    p->degrees_.push_back(0);
  }
  finalize_basis(p->index_, p->dims_upto_, p->basis_, p->degrees_, degree);

  p->unit_ = Element::basis(p.get(), G.identity());
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    for (std::uint32_t j = 0; j < G.size(); ++j)
      p->mult_.emplace(pair_key(i, j), Element::basis(p.get(), G.mul(i, j)));
    Tensor2 d(p.get(), p.get());
    d.add_scaled(i, i, Rational(1));
    p->delta_.push_back(std::move(d));
    p->counit_.push_back(Rational(1));
    p->antipode_.push_back(Element::basis(p.get(), G.inverse(i)));
  }

  std::vector<std::uint32_t> gl(G.size());
  for (std::uint32_t g = 0; g < G.size(); ++g) gl[g] = g;
  p->declared_grouplikes_ = std::move(gl);
  p->build_generator_list();
  return p;
}

HopfPresentation::Ptr HopfPresentation::enveloping(LieAlgebra lie, int degree,
                                                   std::string name) {
  auto p = std::shared_ptr<HopfPresentation>(new HopfPresentation());
  p->check_degree(degree);
  p->kind_ = HopfKind::Enveloping;
  p->degree_ = degree;
  p->name_ = std::move(name);
  p->lie_ = std::move(lie);

  for (const Monomial& m : enumerate_monomials(p->lie_.dim(), degree)) {
    p->degrees_.push_back(monomial_degree(m));
    p->basis_.push_back(BasisKey{m, 0});
  }
  finalize_basis(p->index_, p->dims_upto_, p->basis_, p->degrees_, degree);

  PbwEngine engine(p->lie_, degree);
  auto element_of = [&](const PbwCombo& combo) {
    Element out(p.get());
    for (const auto& [m, c] : combo) out.add_scaled(*p->find_basis(BasisKey{m, 0}), c);
    return out;
  };

  p->unit_ = Element::basis(p.get(), 0);
  const std::uint32_t n = p->dim();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (p->degrees_[i] + p->degrees_[j] > degree) continue;
      p->mult_.emplace(pair_key(i, j),
                       element_of(engine.multiply(p->basis_[i].exps, p->basis_[j].exps)));
    }
    Tensor2 d(p.get(), p.get());
    for_each_split(p->basis_[i].exps,
                   [&](const Monomial& b, const Monomial& rest, const Rational& coef) {
                     d.add_scaled(*p->find_basis(BasisKey{b, 0}),
                                  *p->find_basis(BasisKey{rest, 0}), coef);
                   });
    p->delta_.push_back(std::move(d));
    p->counit_.push_back(Rational(p->degrees_[i] == 0 ? 1 : 0));
    p->antipode_.push_back(element_of(engine.antipode(p->basis_[i].exps)));
  }
  p->build_generator_list();
  return p;
}

HopfPresentation::Ptr HopfPresentation::smash(HopfAction action, int degree,
                                              std::string name) {
  auto p = std::shared_ptr<HopfPresentation>(new HopfPresentation());
  p->check_degree(degree);
  p->kind_ = HopfKind::Smash;
  p->degree_ = degree;
  p->name_ = std::move(name);
  p->action_ = std::move(action);
  p->group_ = p->action_->group();
  p->lie_ = p->action_->lie();
  const FiniteGroup& G = p->group_;
  const std::uint32_t dim_l = p->lie_.dim();

  {
    std::set<std::string> seen(G.labels().begin(), G.labels().end());
    for (const auto& l : p->lie_.labels())
      if (seen.count(l))
        throw ValidationError("generator label '" + l +
                              "' is used by both the group and the Lie algebra");
  }

  p->enumerate_smash_basis(dim_l);
  finalize_basis(p->index_, p->dims_upto_, p->basis_, p->degrees_, degree);

  PbwEngine engine(p->lie_, degree);
  auto element_of = [&](const PbwCombo& combo, std::uint32_t g) {
    Element out(p.get());
    for (const auto& [m, c] : combo) out.add_scaled(*p->find_basis(BasisKey{m, g}), c);
    return out;
  };

  std::map<std::pair<std::uint32_t, Monomial>, PbwCombo> rho_cache;
  auto rho = [&](std::uint32_t g, const Monomial& m) -> const PbwCombo& {
    auto key = std::make_pair(g, m);
    auto it = rho_cache.find(key);
    if (it == rho_cache.end())
      it = rho_cache.emplace(key, rho_hat(engine, *p->action_, g, m)).first;
    return it->second;
  };

  p->unit_ = Element::basis(p.get(), *p->find_basis(BasisKey{Monomial(dim_l, 0), G.identity()}));
  const std::uint32_t n = p->dim();
  for (std::uint32_t i = 0; i < n; ++i) {
    const Monomial& a = p->basis_[i].exps;
    const std::uint32_t g = p->basis_[i].group;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (p->degrees_[i] + p->degrees_[j] > degree) continue;
      /* (x^a # g)(x^b # h) = (x^a * rho(g)x^b) # gh */
      PbwCombo total;
      for (const auto& [m, c] : rho(g, p->basis_[j].exps))
        combo_add(total, engine.multiply(a, m), c);
      p->mult_.emplace(pair_key(i, j), element_of(total, G.mul(g, p->basis_[j].group)));
    }
    Tensor2 d(p.get(), p.get());
    for_each_split(a, [&](const Monomial& b, const Monomial& rest, const Rational& coef) {
      d.add_scaled(*p->find_basis(BasisKey{b, g}), *p->find_basis(BasisKey{rest, g}), coef);
    });
    p->delta_.push_back(std::move(d));
    p->counit_.push_back(Rational(p->degrees_[i] == 0 ? 1 : 0));
    /* S(x^a # g) = rho(g^{-1})(S x^a) # g^{-1} */
    const std::uint32_t ginv = G.inverse(g);
    PbwCombo img;
    for (const auto& [m, c] : engine.antipode(a)) combo_add(img, rho(ginv, m), c);
    p->antipode_.push_back(element_of(img, ginv));
  }
  p->build_generator_list();
  return p;
}

HopfPresentation::Ptr HopfPresentation::structure_constants(ScData data, int degree,
                                                            std::string name) {
  auto p = std::shared_ptr<HopfPresentation>(new HopfPresentation());
  p->check_degree(degree);
  p->kind_ = HopfKind::StructureConstants;
  p->degree_ = degree;
  p->name_ = std::move(name);

  const std::size_t n = data.labels.size();
  if (n == 0) throw ValidationError("structure-constant presentation has no basis");
  {
    std::set<std::string> seen;
    for (const auto& l : data.labels)
      if (!seen.insert(l).second)
        throw ValidationError("duplicate basis label '" + l + "'");
  }
  if (data.degrees.size() != n)
    throw ValidationError("degree list has " + std::to_string(data.degrees.size()) +
                          " entries for " + std::to_string(n) + " basis labels");
  for (std::size_t i = 0; i < n; ++i) {
    if (data.degrees[i] < 0 || data.degrees[i] > degree)
      throw ValidationError("basis degree of '" + data.labels[i] +
                            "' outside [0, " + std::to_string(degree) + "]");
    if (i > 0 && data.degrees[i] < data.degrees[i - 1])
      throw ValidationError("basis labels must be listed in nondecreasing degree order");
  }
  if (data.delta.size() != n || data.counit.size() != n || data.antipode.size() != n)
    throw ValidationError("structure map tables must each have one entry per basis label");

  auto check_index = [&](std::uint32_t i, const std::string& what) {
    if (i >= n) throw ValidationError(what + " references basis index " + std::to_string(i) +
                                      " out of range");
  };
  if (data.unit.empty()) throw ValidationError("unit must be a nonzero vector");
  for (const auto& [i, c] : data.unit) {
    check_index(i, "unit");
    if (is_zero(c)) throw ValidationError("unit has a zero coefficient entry");
    if (data.degrees[i] != 0)
      throw ValidationError("unit is supported on '" + data.labels[i] +
                            "' of nonzero degree");
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int dsum = data.degrees[i] + data.degrees[j];
      auto it = data.mult.find({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      if (dsum <= degree) {
        if (it == data.mult.end())
          throw ValidationError("missing product entry for (" + data.labels[i] + ", " +
                                data.labels[j] + ")");
        for (const auto& [t, c] : it->second) {
          check_index(t, "product (" + data.labels[i] + ", " + data.labels[j] + ")");
          if (data.degrees[t] > dsum)
            throw ValidationError("product (" + data.labels[i] + ", " + data.labels[j] +
                                  ") has a term of degree above " + std::to_string(dsum));
        }
      } else if (it != data.mult.end()) {
        throw ValidationError("product entry (" + data.labels[i] + ", " + data.labels[j] +
                              ") lies beyond the truncation degree");
      }
    }

  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [pair, c] : data.delta[i]) {
      check_index(pair.first, "comultiplication of '" + data.labels[i] + "'");
      check_index(pair.second, "comultiplication of '" + data.labels[i] + "'");
      (void)c;
      if (data.degrees[pair.first] + data.degrees[pair.second] > data.degrees[i])
        throw ValidationError("comultiplication of '" + data.labels[i] +
                              "' is not filtration-compatible");
    }
    for (const auto& [t, c] : data.antipode[i]) {
      check_index(t, "antipode of '" + data.labels[i] + "'");
      (void)c;
      if (data.degrees[t] > data.degrees[i])
        throw ValidationError("antipode of '" + data.labels[i] + "' raises degree");
    }
  }
  if (data.grouplikes)
    for (auto g : *data.grouplikes) check_index(g, "declared grouplike");

  p->sc_labels_ = data.labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    p->basis_.push_back(BasisKey{{}, i});
    p->degrees_.push_back(data.degrees[i]);
  }
  finalize_basis(p->index_, p->dims_upto_, p->basis_, p->degrees_, degree);

  p->unit_ = Element::from_lincomb(p.get(), data.unit);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (p->degrees_[i] + p->degrees_[j] > degree) continue;
      p->mult_.emplace(pair_key(i, j),
                       Element::from_lincomb(p.get(), data.mult.at({i, j})));
    }
    Tensor2 d(p.get(), p.get());
    for (const auto& [pair, c] : data.delta[i]) d.add_scaled(pair.first, pair.second, c);
    p->delta_.push_back(std::move(d));
    p->counit_.push_back(data.counit[i]);
    p->antipode_.push_back(Element::from_lincomb(p.get(), data.antipode[i]));
  }
  p->declared_grouplikes_ = std::move(data.grouplikes);
  p->build_generator_list();
  return p;
}

ScData to_structure_constants(const HopfPresentation& p) {
  ScData out;
  const std::uint32_t n = p.dim();
  for (std::uint32_t i = 0; i < n; ++i) {
    out.labels.push_back(p.basis_label(i));
    out.degrees.push_back(p.degree_of(i));
    out.delta.push_back({p.delta_basis(i).terms().begin(), p.delta_basis(i).terms().end()});
    out.counit.push_back(p.counit_basis(i));
    out.antipode.push_back(p.antipode_basis(i).lincomb());
  }
  out.unit = p.one().lincomb();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (p.degree_of(i) + p.degree_of(j) > p.degree_bound()) continue;
      out.mult[{i, j}] = p.mult_basis(i, j).lincomb();
    }
  out.grouplikes = p.declared_grouplikes();
  return out;
}

}  // namespace hopfcat
