#include "hopfcat/run.hpp"

#include "hopfcat/axioms.hpp"
#include "hopfcat/exactness.hpp"
#include "hopfcat/functors.hpp"

namespace hopfcat {

namespace {

Json dims_by_level(const HopfPresentation& h) {
    Json dims = Json::array();
    for (int k = 0; k <= h.degree_bound(); ++k) dims.push_back(h.dim_upto(k));
    return dims;
}

Json int_array(const std::vector<int>& v) {
    return Json(v);
}

Json string_array(const std::vector<std::string>& v) {
    return Json(v);
}

std::string lie_term_str(const LieAlgebra& lie, const LinComb& c) {
    if (c.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < c.size(); ++t) {
        const Rational& coeff = c[t].second;
        const bool neg = coeff < 0;
        const Rational mag = neg ? Rational(-coeff) : coeff;
        if (t == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (!is_one(mag)) out += to_string(mag) + "*";
        out += lie.label(c[t].first);
    }
    return out;
}

Json bracket_table(const LieAlgebra& lie) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < lie.dim(); ++i)
        for (std::uint32_t j = i + 1; j < lie.dim(); ++j) {
            if (lie.bracket(i, j).empty()) continue;
            rows.push_back("[" + lie.label(i) + ", " + lie.label(j) +
                           "] = " + lie_term_str(lie, lie.bracket(i, j)));
        }
    return rows;
}

RunResult finish(const std::string& command, const std::string& model_path,
                 const std::string& subject, const Model& m, const Verdict& v, Json data) {
    return RunResult{make_report(command, model_path, subject, m.degree, v, std::move(data)),
                     v.pass};
}

}  // namespace

RunResult run_check_axioms(const Model& m, const std::string& model_path,
                           const std::string& object, ExecMode mode) {
    const HopfPresentation::Ptr& h = m.hopf(object);
    Verdict v = check_hopf_axioms(*h, mode);
    Json data;
    data["object"] = object;
    data["kind"] = kind_name(h->kind());
    data["dim"] = h->dim();
    data["dims_by_level"] = dims_by_level(*h);
    return finish("check-axioms", model_path, object, m, v, std::move(data));
}

RunResult run_decompose(const Model& m, const std::string& model_path, const std::string& object,
                        ExecMode mode) {
    const HopfPresentation::Ptr& h = m.hopf(object);
    Decomposition dec = decompose(h, mode);
    Json prim;
    prim["dim"] = dec.primitive.labels.size();
    prim["labels"] = string_array(dec.primitive.labels);
    prim["brackets"] = bracket_table(dec.primitive.lie);
    Json grp;
    grp["order"] = dec.grouplike.labels.size();
    grp["labels"] = string_array(dec.grouplike.labels);
    grp["forms_group"] = dec.grouplike.forms_group;
    Json data;
    data["object"] = object;
    data["primitive_part"] = std::move(prim);
    data["grouplike_part"] = std::move(grp);
    data["smash_model"] = dec.smash_model->name();
    data["smash_model_dim"] = dec.smash_model->dim();
    return finish("decompose", model_path, object, m, dec.verdict, std::move(data));
}

RunResult run_torsion(const Model& m, const std::string& model_path, const std::string& object,
                      ExecMode mode) {
    const HopfPresentation::Ptr& h = m.hopf(object);
    Decomposition dec = decompose(h, mode);
    Verdict v;
    v.degree = dec.verdict.degree;
    v.merge(dec.verdict, "decomposition: ");
    v.merge(check_ses(dec.i, dec.p, &dec.s, mode), "sequence: ");
    v.merge(class_membership(dec.prim_part, HopfClass::PrimitiveType, mode), "primitive part: ");
    v.merge(class_membership(dec.group_part, HopfClass::GroupType, mode), "group part: ");
    Json prim;
    prim["class"] = "primitive-type";
    prim["labels"] = string_array(dec.primitive.labels);
    Json dims = Json::array();
    for (int k = 0; k <= dec.prim_part->degree_bound(); ++k)
        dims.push_back(dec.prim_part->dim_upto(k));
    prim["dims_by_level"] = std::move(dims);
    Json grp;
    grp["class"] = "group-type";
    grp["order"] = dec.grouplike.labels.size();
    grp["labels"] = string_array(dec.grouplike.labels);
    Json data;
    data["object"] = object;
    data["torsion_free_part"] = std::move(prim);
    data["torsion_part"] = std::move(grp);
    return finish("torsion", model_path, object, m, v, std::move(data));
}

RunResult run_factorize(const Model& m, const std::string& model_path,
                        const std::string& morphism, ExecMode mode) {
    const HopfMorphism& f = m.morphism(morphism);
    Factorization fac = factorize(f, mode);
    Json kernel;
    kernel["dims_by_level"] = int_array(fac.kernel.dim_upto);
    Json kbasis = Json::array();
    for (const Element& e : fac.kernel.basis) kbasis.push_back(e.str());
    kernel["basis"] = std::move(kbasis);
    Json quotient;
    quotient["dim"] = fac.cokernel.quotient->dim();
    Json qlabels = Json::array();
    for (std::uint32_t i = 0; i < fac.cokernel.quotient->dim(); ++i)
        qlabels.push_back(fac.cokernel.quotient->basis_label(i));
    quotient["labels"] = std::move(qlabels);
    Json data;
    data["morphism"] = morphism;
    data["source"] = f.source()->name();
    data["target"] = f.target()->name();
    data["kernel"] = std::move(kernel);
    data["ideal_dims_by_level"] = int_array(fac.cokernel.ideal_dim_upto);
    data["quotient"] = std::move(quotient);
    return finish("factorize", model_path, morphism, m, fac.verdict, std::move(data));
}

RunResult run_verify_ses(const Model& m, const std::string& model_path, const std::string& i,
                         const std::string& p, const std::string& s, ExecMode mode) {
    const HopfMorphism& mi = m.morphism(i);
    const HopfMorphism& mp = m.morphism(p);
    const HopfMorphism* ms = s.empty() ? nullptr : &m.morphism(s);
    Verdict v = check_ses(mi, mp, ms, mode);
    Json data;
    data["i"] = i;
    data["p"] = p;
    if (!s.empty()) data["s"] = s;
    data["objects"] =
        Json::array({mi.source()->name(), mi.target()->name(), mp.target()->name()});
    std::string subject = i + ", " + p;
    if (!s.empty()) subject += ", " + s;
    return finish("verify-ses", model_path, subject, m, v, std::move(data));
}

RunResult run_verify_diagram(const Model& m, const std::string& model_path,
                             const std::string& diagram, const std::string& lemma,
                             ExecMode mode) {
    SplitLemma which;
    if (lemma == "five")
        which = SplitLemma::FiveLemma;
    else if (lemma == "surjectivity")
        which = SplitLemma::Surjectivity;
    else
        throw ModelError("unknown lemma '" + lemma + "' (expected five or surjectivity)");
    const DiagramSpec& spec = m.diagram(diagram);
    const bool canonical = spec.top.size() == 1;
    Verdict v;
    if (canonical) {
        Decomposition top = decompose(m.hopf(spec.top[0]), mode);
        Decomposition bottom = decompose(m.hopf(spec.bottom[0]), mode);
        const HopfMorphism& middle = m.morphism(spec.middle);
        InducedPair induced = induced_pair(middle, top, bottom, mode);
        v.merge(induced.verdict, "induced maps: ");
        SplitDiagramMorphism d{SplitSES{top.i, top.p, top.s},
                               SplitSES{bottom.i, bottom.p, bottom.s},
                               induced.prim_map, middle, induced.grp_map};
        v.merge(check_split_diagram(d, which, mode));
        v.degree = m.hopf(spec.top[0])->degree_bound();
    } else {
        SplitDiagramMorphism d{
            SplitSES{m.morphism(spec.top[0]), m.morphism(spec.top[1]), m.morphism(spec.top[2])},
            SplitSES{m.morphism(spec.bottom[0]), m.morphism(spec.bottom[1]),
                     m.morphism(spec.bottom[2])},
            m.morphism(spec.left), m.morphism(spec.middle), m.morphism(spec.right)};
        v = check_split_diagram(d, which, mode);
    }
    Json data;
    data["diagram"] = diagram;
    data["lemma"] = lemma;
    data["rows"] = canonical ? "canonical" : "explicit";
    data["top"] = string_array(spec.top);
    data["bottom"] = string_array(spec.bottom);
    return finish("verify-diagram", model_path, diagram, m, v, std::move(data));
}

RunResult run_zero_hom(const Model& m, const std::string& model_path, const std::string& source,
                       const std::string& target, ExecMode mode) {
    const HopfPresentation::Ptr& env = m.hopf(source);
    const HopfPresentation::Ptr& grp = m.hopf(target);
    Verdict v = zero_morphism_certificate(env, grp, mode);
    Json data;
    data["source"] = source;
    data["target"] = target;
    data["target_primitive_dim"] = primitives(grp, mode).labels.size();
    return finish("zero-hom", model_path, source + " -> " + target, m, v, std::move(data));
}

}  // namespace hopfcat
