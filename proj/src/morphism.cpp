#include "hopfcat/morphism.hpp"

#include <algorithm>
#include <set>

namespace hopfcat {

namespace {

void check_compatible(const HopfPresentation::Ptr& source,
                      const HopfPresentation::Ptr& target) {
  if (!source || !target) throw ValidationError("morphism endpoints must be non-null");
  if (source->degree_bound() != target->degree_bound())
    throw ValidationError("source truncation degree " +
                          std::to_string(source->degree_bound()) +
                          " differs from target degree " +
                          std::to_string(target->degree_bound()));
}

void check_image_owner(const Element& img, const HopfPresentation::Ptr& target,
                       const std::string& what) {
  if (!img.is_zero() && !same_presentation(img.owner(), target.get()))
    throw OwnershipError("image of " + what + " does not live in target '" +
                         target->name() + "'");
}

}  // namespace

HopfMorphism HopfMorphism::from_basis_images(HopfPresentation::Ptr source,
                                             HopfPresentation::Ptr target,
                                             std::vector<Element> images, std::string name) {
  check_compatible(source, target);
  if (images.size() != source->dim())
    throw ValidationError("expected " + std::to_string(source->dim()) +
                          " basis images, got " + std::to_string(images.size()));
  for (std::uint32_t i = 0; i < images.size(); ++i)
    check_image_owner(images[i], target, "basis element " + source->basis_label(i));
  HopfMorphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.images_ = std::move(images);
  f.name_ = std::move(name);
  return f;
}

HopfMorphism HopfMorphism::identity(HopfPresentation::Ptr h) {
  std::vector<Element> images;
  for (std::uint32_t i = 0; i < h->dim(); ++i) images.push_back(h->basis_element(i));
  return from_basis_images(h, h, std::move(images), "id");
}

HopfMorphism HopfMorphism::from_generators(HopfPresentation::Ptr source,
                                           HopfPresentation::Ptr target,
                                           const std::map<std::string, Element>& images,
                                           ValidatePolicy policy, std::string name) {
  check_compatible(source, target);
  const auto& gens = source->generators();

  std::set<std::string> known_labels;
  for (const auto& g : gens) known_labels.insert(g.label);
  for (const auto& [label, img] : images) {
    if (!known_labels.count(label))
      throw ValidationError("'" + label + "' is not a generator of '" + source->name() +
                            "'");
    check_image_owner(img, target, "generator '" + label + "'");
  }

  std::vector<std::string> notes;

  /* Group part: close the provided images under the group product. */
  const FiniteGroup& G = source->group();
  std::vector<Element> group_image(G.size(), Element());
  std::vector<bool> group_known(G.size(), false);
  if (source->kind() != HopfKind::StructureConstants) {
    group_image[G.identity()] = target->one();
    group_known[G.identity()] = true;
    for (const auto& g : gens) {
      if (g.type != HopfPresentation::Generator::Type::Group) continue;
      auto it = images.find(g.label);
      if (it == images.end()) continue;
      if (group_known[g.index] && !(group_image[g.index] == it->second))
        notes.push_back("conflicting images for group element '" + g.label + "'");
      group_image[g.index] = it->second;
      group_known[g.index] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t a = 0; a < G.size(); ++a) {
        if (!group_known[a]) continue;
        for (std::uint32_t b = 0; b < G.size(); ++b) {
          if (!group_known[b]) continue;
          const std::uint32_t ab = G.mul(a, b);
          Element prod;
          try {
            prod = target->multiply(group_image[a], group_image[b]);
          } catch (const TruncationError& e) {
            throw ValidationError("image of '" + G.label(ab) +
                                  "' cannot be tabulated: " + e.what());
          }
          if (!group_known[ab]) {
            group_image[ab] = std::move(prod);
            group_known[ab] = true;
            changed = true;
          } else if (!(group_image[ab] == prod)) {
            std::string note = "group closure conflict at '" + G.label(a) + "'*'" +
                               G.label(b) + "': " + prod.str() + " vs " +
                               group_image[ab].str();
            if (std::find(notes.begin(), notes.end(), note) == notes.end())
              notes.push_back(std::move(note));
          }
        }
      }
    }
    for (std::uint32_t g = 0; g < G.size(); ++g)
      if (!group_known[g])
        throw ValidationError("no image reachable for group element '" + G.label(g) +
                              "'; the given images do not generate the group");
  }

  /* Lie part: every letter needs an explicit image. */
  const LieAlgebra& L = source->lie();
  std::vector<Element> letter_image(L.dim(), Element());
  if (source->kind() == HopfKind::Enveloping || source->kind() == HopfKind::Smash) {
    for (std::uint32_t l = 0; l < L.dim(); ++l) {
      auto it = images.find(L.label(l));
      if (it == images.end())
        throw ValidationError("missing image for Lie generator '" + L.label(l) + "'");
      letter_image[l] = it->second;
    }
  }

  /* Tabulate the full basis. Monomial images build up degree by degree, so
     each product is a letter image against an already-known image. */
  std::vector<Element> basis_images(source->dim(), Element());
  switch (source->kind()) {
    case HopfKind::StructureConstants: {
      for (const auto& g : gens) {
        auto it = images.find(g.label);
        if (it == images.end())
          throw ValidationError("missing image for basis element '" + g.label + "'");
        basis_images[g.basis] = it->second;
      }
      break;
    }
    case HopfKind::GroupAlgebra: {
      for (std::uint32_t i = 0; i < source->dim(); ++i)
        basis_images[i] = group_image[source->basis_key(i).group];
      break;
    }
    case HopfKind::Enveloping:
    case HopfKind::Smash: {
      std::map<Monomial, Element> mono_image;
      mono_image[Monomial(L.dim(), 0)] = target->one();
      for (std::uint32_t i = 0; i < source->dim(); ++i) {
        const BasisKey& key = source->basis_key(i);
        auto it = mono_image.find(key.exps);
        if (it == mono_image.end()) {
          Monomial rest = key.exps;
          std::uint32_t letter = 0;
          while (rest[letter] == 0) ++letter;
          --rest[letter];
          try {
            Element img =
                target->multiply(letter_image[letter], mono_image.at(rest));
            it = mono_image.emplace(key.exps, std::move(img)).first;
          } catch (const TruncationError& e) {
            throw ValidationError("image of '" + source->basis_label(i) +
                                  "' cannot be tabulated: " + e.what());
          }
        }
        if (source->kind() == HopfKind::Smash) {
          try {
            basis_images[i] = target->multiply(it->second, group_image[key.group]);
          } catch (const TruncationError& e) {
            throw ValidationError("image of '" + source->basis_label(i) +
                                  "' cannot be tabulated: " + e.what());
          }
        } else {
          basis_images[i] = it->second;
        }
      }
      break;
    }
  }

  HopfMorphism f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.images_ = std::move(basis_images);
  f.name_ = std::move(name);
  f.closure_notes_ = std::move(notes);
  if (policy == ValidatePolicy::Strict) {
    Verdict v = f.validate();
    if (!v.pass)
      throw ValidationError("morphism" + (f.name_.empty() ? "" : " '" + f.name_ + "'") +
                            " fails validation: " + v.first_failure());
  }
  return f;
}

Element HopfMorphism::apply(const Element& a) const {
  if (a.is_zero()) return target_->zero();
  if (!same_presentation(a.owner(), source_.get()))
    throw OwnershipError("applied morphism to an element outside its source");
  Element out = target_->zero();
  for (const auto& [i, c] : a.terms()) out.add_scaled(images_[i], c);
  return out;
}

Verdict HopfMorphism::validate(ExecMode mode) const {
  Verdict v;
  v.degree = source_->degree_bound();
  const HopfPresentation& A = *source_;
  const HopfPresentation& B = *target_;
  const std::uint32_t n = A.dim();
  const int d = A.degree_bound();

  v.add([&] {
    CheckResult c{"filtration", true, n, "", ""};
    auto fails = collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
      if (images_[i].degree() <= A.degree_of(static_cast<std::uint32_t>(i)))
        return std::nullopt;
      return A.basis_label(static_cast<std::uint32_t>(i)) + " of degree " +
             std::to_string(A.degree_of(static_cast<std::uint32_t>(i))) +
             " maps to degree " + std::to_string(images_[i].degree());
    });
    if (!fails.empty()) {
      c.pass = false;
      c.witness = fails.front().second;
      c.details = std::to_string(fails.size()) + " of " + std::to_string(n) +
                  " instances failed";
    }
    return c;
  }());

  {
    CheckResult c{"unit", true, 1, "", ""};
    if (!(apply(A.one()) == B.one())) {
      c.pass = false;
      c.witness = "f(1) = " + apply(A.one()).str();
    }
    v.add(std::move(c));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (A.degree_of(i) + A.degree_of(j) <= d) pairs.push_back({i, j});

  v.add([&] {
    CheckResult c{"multiplicative", true, pairs.size(), "", ""};
    auto fails =
        collect_failures(pairs.size(), mode, [&](std::size_t t) -> std::optional<std::string> {
          const auto [i, j] = pairs[t];
          const std::string where =
              "(" + A.basis_label(i) + ", " + A.basis_label(j) + ")";
          try {
            Element lhs = apply(A.mult_basis(i, j));
            Element rhs = B.multiply(images_[i], images_[j]);
            if (lhs == rhs) return std::nullopt;
            return where + ": f(ab) = " + lhs.str() + ", f(a)f(b) = " + rhs.str();
          } catch (const TruncationError& e) {
            return where + ": " + e.what();
          }
        });
    if (!fails.empty()) {
      c.pass = false;
      c.witness = fails.front().second;
      c.details = std::to_string(fails.size()) + " of " + std::to_string(pairs.size()) +
                  " instances failed";
    }
    return c;
  }());

  v.add([&] {
    CheckResult c{"comultiplicative", true, n, "", ""};
    auto fails = collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
      Tensor2 lhs(target_.get(), target_.get());
      for (const auto& [ab, coef] : A.delta_basis(static_cast<std::uint32_t>(i)).terms())
        for (const auto& [p, cp] : images_[ab.first].terms())
          for (const auto& [q, cq] : images_[ab.second].terms())
            lhs.add_scaled(p, q, coef * cp * cq);
      Tensor2 rhs = B.comultiply(images_[i]);
      if (lhs == rhs) return std::nullopt;
      return A.basis_label(static_cast<std::uint32_t>(i)) +
             ": (f (x) f)Delta = " + lhs.str() + ", Delta f = " + rhs.str();
    });
    if (!fails.empty()) {
      c.pass = false;
      c.witness = fails.front().second;
      c.details =
          std::to_string(fails.size()) + " of " + std::to_string(n) + " instances failed";
    }
    return c;
  }());

  v.add([&] {
    CheckResult c{"counit", true, n, "", ""};
    auto fails = collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
      Rational lhs = B.counit(images_[i]);
      const Rational& rhs = A.counit_basis(static_cast<std::uint32_t>(i));
      if (lhs == rhs) return std::nullopt;
      return A.basis_label(static_cast<std::uint32_t>(i)) + ": eps f = " + to_string(lhs) +
             ", eps = " + to_string(rhs);
    });
    if (!fails.empty()) {
      c.pass = false;
      c.witness = fails.front().second;
      c.details =
          std::to_string(fails.size()) + " of " + std::to_string(n) + " instances failed";
    }
    return c;
  }());

  v.add([&] {
    CheckResult c{"antipode", true, n, "", ""};
    auto fails = collect_failures(n, mode, [&](std::size_t i) -> std::optional<std::string> {
      Element lhs = apply(A.antipode_basis(static_cast<std::uint32_t>(i)));
      Element rhs = B.antipode(images_[i]);
      if (lhs == rhs) return std::nullopt;
      return A.basis_label(static_cast<std::uint32_t>(i)) + ": f S = " + lhs.str() +
             ", S f = " + rhs.str();
    });
    if (!fails.empty()) {
      c.pass = false;
      c.witness = fails.front().second;
      c.details =
          std::to_string(fails.size()) + " of " + std::to_string(n) + " instances failed";
    }
    return c;
  }());

  {
    CheckResult c{"generator consistency", true, closure_notes_.size(), "", ""};
    if (!closure_notes_.empty()) {
      c.pass = false;
      c.witness = closure_notes_.front();
      c.details = std::to_string(closure_notes_.size()) + " closure conflicts";
      c.items = closure_notes_.size();
    }
    v.add(std::move(c));
  }

  return v;
}

SparseMatrix HopfMorphism::matrix_upto(int k) const {
  const int rows = static_cast<int>(target_->dim_upto(k));
  const int cols = static_cast<int>(source_->dim_upto(k));
  std::vector<SparseRow> row_data(rows);
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, coef] : images_[c].terms())
      if (static_cast<int>(r) < rows) row_data[r].push_back({c, coef});
  return SparseMatrix::from_rows(row_data, cols);
}

HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
  if (f.target() != g.source())
    throw ValidationError("composition mismatch: '" + f.name() + "' lands in '" +
                          f.target()->name() + "' but '" + g.name() + "' starts at '" +
                          g.source()->name() + "'");
  std::vector<Element> images;
  for (std::uint32_t i = 0; i < f.source()->dim(); ++i)
    images.push_back(g.apply(f.image_basis(i)));
  std::string name = g.name().empty() || f.name().empty()
                         ? std::string()
                         : "(" + g.name() + " . " + f.name() + ")";
  return HopfMorphism::from_basis_images(f.source(), g.target(), std::move(images),
                                         std::move(name));
}

HopfMorphism trivial_morphism(HopfPresentation::Ptr source, HopfPresentation::Ptr target) {
  std::vector<Element> images;
  for (std::uint32_t i = 0; i < source->dim(); ++i)
    images.push_back(target->one().scaled(source->counit_basis(i)));
  return HopfMorphism::from_basis_images(std::move(source), std::move(target),
                                         std::move(images), "triv");
}

MorphismAnalysis analyze(const HopfMorphism& f, ExecMode mode) {
  MorphismAnalysis out;
  const int d = f.source()->degree_bound();
  for (int k = 0; k <= d; ++k) {
    out.rank.push_back(static_cast<std::uint32_t>(rref(f.matrix_upto(k), mode).rank));
    out.source_dim.push_back(f.source()->dim_upto(k));
    out.target_dim.push_back(f.target()->dim_upto(k));
  }
  out.injective = out.rank.back() == out.source_dim.back();
  out.surjective = out.rank.back() == out.target_dim.back();
  out.bijective = out.injective && out.surjective;
  return out;
}

}  // namespace hopfcat
