#include "hopfcat/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hopfcat {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(std::move(t));
  return out;
}

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  int line = 0;
  std::vector<KeyValue> entries;

  /* Value of a unique plain key, or empty. */
  const KeyValue* find(const std::string& key) const {
    for (const auto& kv : entries)
      if (kv.key == key) return &kv;
    return nullptr;
  }
};

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
  throw ModelError(file + ":" + std::to_string(line) + ": " + msg);
}

/* --- element expression evaluation ----------------------------------- */

bool is_number_token(const std::string& t) {
  return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) != 0);
}

struct ExprLexer {
  std::string text;
  std::size_t pos = 0;

  std::string next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) return "";
    char c = text[pos];
    if (c == '+' || c == '-' || c == '*' || c == '^' || c == '.') {
      ++pos;
      return std::string(1, c);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      return text.substr(start, pos - start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '\''))
        ++pos;
      return text.substr(start, pos - start);
    }
    throw ValidationError("unexpected character '" + std::string(1, c) + "' in expression");
  }

  std::string peek() {
    std::size_t saved = pos;
    std::string t = next();
    pos = saved;
    return t;
  }
};

std::map<std::string, std::uint32_t> label_table(const HopfPresentation& h) {
  std::map<std::string, std::uint32_t> table;
  for (const auto& g : h.generators()) table[g.label] = g.basis;
  if (h.kind() == HopfKind::GroupAlgebra || h.kind() == HopfKind::Smash) {
    const FiniteGroup& G = h.group();
    for (std::uint32_t g = 0; g < G.size(); ++g)
      if (auto idx = h.find_basis(BasisKey{{}, g})) table[G.label(g)] = *idx;
  }
  return table;
}

Element eval_expression(const HopfPresentation::Ptr& h, const std::string& expr) {
  const std::map<std::string, std::uint32_t> labels = label_table(*h);
  ExprLexer lex{expr};
  Element total = h->zero();
  Rational sign(1);
  std::string t = lex.next();
  if (t.empty()) throw ValidationError("empty expression");
  if (t == "-") {
    sign = -1;
    t = lex.next();
  } else if (t == "+") {
    t = lex.next();
  }
  for (;;) {
    /* one term: factors joined by '*' */
    Rational coef = sign;
    Element prod = h->one();
    bool saw_factor = false;
    for (;;) {
      if (t.empty() || t == "+" || t == "-") break;
      if (t == "*") {
        t = lex.next();
        continue;
      }
      if (is_number_token(t)) {
        coef *= parse_rational(t);
      } else if (t == "^" || t == ".") {
        throw ValidationError("misplaced '" + t + "' in expression");
      } else {
        auto it = labels.find(t);
        if (it == labels.end()) throw ValidationError("unknown label '" + t + "'");
        int power = 1;
        if (lex.peek() == "^") {
          lex.next();
          std::string p = lex.next();
          if (!is_number_token(p)) throw ValidationError("exponent must be a number");
          power = static_cast<int>(parse_rational(p).get_num().get_si());
          if (power < 0) throw ValidationError("negative exponent");
        }
        for (int k = 0; k < power; ++k) prod = h->multiply(prod, h->basis_element(it->second));
      }
      saw_factor = true;
      t = lex.next();
    }
    if (!saw_factor) throw ValidationError("empty term in expression");
    total.add_scaled(prod, coef);
    if (t.empty()) return total;
    sign = (t == "-") ? Rational(-1) : Rational(1);
    t = lex.next();
  }
}

/* Linear combination over a fixed label set; no products, used for lie
   brackets, action images, and structure-constant tables. */
LinComb eval_lincomb(const std::map<std::string, std::uint32_t>& labels, const std::string& expr) {
  ExprLexer lex{expr};
  LinAccum acc;
  Rational sign(1);
  std::string t = lex.next();
  if (t.empty()) throw ValidationError("empty expression");
  if (t == "-") {
    sign = -1;
    t = lex.next();
  }
  for (;;) {
    Rational coef = sign;
    std::uint32_t index = 0;
    bool have_label = false, have_coef = false;
    for (;;) {
      if (t.empty() || t == "+" || t == "-") break;
      if (t == "*") {
        t = lex.next();
        continue;
      }
      if (is_number_token(t)) {
        coef *= parse_rational(t);
        have_coef = true;
      } else {
        if (have_label) throw ValidationError("products are not allowed here");
        auto it = labels.find(t);
        if (it == labels.end()) throw ValidationError("unknown label '" + t + "'");
        index = it->second;
        have_label = true;
      }
      t = lex.next();
    }
    if (have_label)
      acc.add(index, coef);
    else if (!have_coef || !is_zero(coef))
      throw ValidationError("term without a label (only literal 0 may stand alone)");
    if (t.empty()) return acc.take();
    sign = (t == "-") ? Rational(-1) : Rational(1);
    t = lex.next();
  }
}

/* Tensor pair combination "a . b + 2 * x . 1" over a fixed label set. */
std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Rational>> eval_pair_combo(
    const std::map<std::string, std::uint32_t>& labels, const std::string& expr) {
  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Rational>> out;
  ExprLexer lex{expr};
  Rational sign(1);
  std::string t = lex.next();
  if (t.empty()) throw ValidationError("empty expression");
  if (t == "-") {
    sign = -1;
    t = lex.next();
  }
  for (;;) {
    Rational coef = sign;
    std::vector<std::uint32_t> legs;
    bool have_coef = false;
    for (;;) {
      if (t.empty() || t == "+" || t == "-") break;
      if (t == "*" || t == ".") {
        t = lex.next();
        continue;
      }
      if (is_number_token(t)) {
        coef *= parse_rational(t);
        have_coef = true;
      } else {
        auto it = labels.find(t);
        if (it == labels.end()) throw ValidationError("unknown label '" + t + "'");
        legs.push_back(it->second);
      }
      t = lex.next();
    }
    if (legs.size() == 2) {
      if (!is_zero(coef)) out.push_back({{legs[0], legs[1]}, coef});
    } else if (!(legs.empty() && have_coef && is_zero(coef))) {
      throw ValidationError("tensor term needs exactly two legs separated by '.'");
    }
    if (t.empty()) return out;
    sign = (t == "-") ? Rational(-1) : Rational(1);
    t = lex.next();
  }
}

/* --- section builders -------------------------------------------------- */

struct Builder {
  Model model;
  std::string file;
  int degree;

  void require_new(const std::string& name, int line) {
    if (model.groups.count(name) || model.lies.count(name) || model.actions.count(name) ||
        model.hopfs.count(name) || model.morphisms.count(name) || model.diagrams.count(name))
      fail(file, line, "name '" + name + "' is already defined");
  }

  const KeyValue& need(const Section& s, const std::string& key) {
    const KeyValue* kv = s.find(key);
    if (!kv) fail(file, s.line, "[" + s.kind + " " + s.name + "] is missing '" + key + " = ...'");
    return *kv;
  }

  void build_group(const Section& s) {
    std::vector<std::string> labels = tokens(need(s, "elements").value);
    if (labels.empty()) fail(file, s.line, "group has no elements");
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    const KeyValue& tab = need(s, "table");
    std::vector<std::vector<std::uint32_t>> table;
    std::istringstream rows(tab.value);
    std::string row;
    while (std::getline(rows, row, '/')) {
      std::vector<std::uint32_t> ids;
      for (const std::string& t : tokens(row)) {
        auto it = index.find(t);
        if (it == index.end()) fail(file, tab.line, "unknown element '" + t + "' in table");
        ids.push_back(it->second);
      }
      if (!ids.empty()) table.push_back(std::move(ids));
    }
    try {
      model.groups.emplace(s.name, FiniteGroup::from_table(std::move(labels), std::move(table)));
    } catch (const HopfError& e) {
      fail(file, s.line, e.what());
    }
  }

  void build_lie(const Section& s) {
    std::vector<std::string> letters = tokens(need(s, "letters").value);
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < letters.size(); ++i) index[letters[i]] = i;
    std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb> brackets;
    for (const auto& kv : s.entries) {
      std::vector<std::string> k = tokens(kv.key);
      if (k.size() == 1 && k[0] == "letters") continue;
      if (k.size() != 3 || k[0] != "bracket")
        fail(file, kv.line, "expected 'letters = ...' or 'bracket a b = ...'");
      auto a = index.find(k[1]), b = index.find(k[2]);
      if (a == index.end() || b == index.end())
        fail(file, kv.line, "unknown letter in bracket key");
      try {
        brackets[{a->second, b->second}] = eval_lincomb(index, kv.value);
      } catch (const HopfError& e) {
        fail(file, kv.line, e.what());
      }
    }
    try {
      model.lies.emplace(s.name, LieAlgebra::make(std::move(letters), brackets));
    } catch (const HopfError& e) {
      fail(file, s.line, e.what());
    }
  }

  void build_action(const Section& s) {
    const std::string gname = trim(need(s, "group").value);
    const std::string lname = trim(need(s, "lie").value);
    auto git = model.groups.find(gname);
    if (git == model.groups.end()) fail(file, s.line, "unknown group '" + gname + "'");
    auto lit = model.lies.find(lname);
    if (lit == model.lies.end()) fail(file, s.line, "unknown lie algebra '" + lname + "'");
    const FiniteGroup& G = git->second;
    const LieAlgebra& L = lit->second;
    std::map<std::string, std::uint32_t> letter_index;
    for (std::uint32_t i = 0; i < L.dim(); ++i) letter_index[L.label(i)] = i;

    std::map<std::uint32_t, std::vector<LinComb>> rho;
    for (const auto& kv : s.entries) {
      std::vector<std::string> k = tokens(kv.key);
      if (k.size() == 1 && (k[0] == "group" || k[0] == "lie")) continue;
      if (k.size() != 3 || k[0] != "rho")
        fail(file, kv.line, "expected 'rho <element> <letter> = ...'");
      auto g = G.index_of(k[1]);
      if (!g) fail(file, kv.line, "unknown group element '" + k[1] + "'");
      auto x = letter_index.find(k[2]);
      if (x == letter_index.end()) fail(file, kv.line, "unknown letter '" + k[2] + "'");
      auto [it, inserted] = rho.try_emplace(*g, std::vector<LinComb>(L.dim()));
      (void)inserted;
      try {
        it->second[x->second] = eval_lincomb(letter_index, kv.value);
      } catch (const HopfError& e) {
        fail(file, kv.line, e.what());
      }
    }
    try {
      model.actions.emplace(s.name, HopfAction::make(G, L, std::move(rho)));
    } catch (const HopfError& e) {
      fail(file, s.line, e.what());
    }
  }

  void build_hopf(const Section& s) {
    const std::string kind = trim(need(s, "kind").value);
    try {
      if (kind == "group") {
        const std::string g = trim(need(s, "group").value);
        auto it = model.groups.find(g);
        if (it == model.groups.end()) fail(file, s.line, "unknown group '" + g + "'");
        model.hopfs.emplace(s.name,
                            HopfPresentation::group_algebra(it->second, degree, s.name));
      } else if (kind == "enveloping") {
        const std::string l = trim(need(s, "lie").value);
        auto it = model.lies.find(l);
        if (it == model.lies.end()) fail(file, s.line, "unknown lie algebra '" + l + "'");
        model.hopfs.emplace(s.name, HopfPresentation::enveloping(it->second, degree, s.name));
      } else if (kind == "smash") {
        const std::string a = trim(need(s, "action").value);
        auto it = model.actions.find(a);
        if (it == model.actions.end()) fail(file, s.line, "unknown action '" + a + "'");
        model.hopfs.emplace(s.name, HopfPresentation::smash(it->second, degree, s.name));
      } else if (kind == "sc") {
        build_sc(s);
      } else {
        fail(file, s.line, "unknown hopf kind '" + kind + "' (group|enveloping|smash|sc)");
      }
    } catch (const ModelError&) {
      throw;
    } catch (const HopfError& e) {
      fail(file, s.line, e.what());
    }
    model.hopf_order.push_back(s.name);
  }

  void build_sc(const Section& s) {
    ScData sc;
    sc.labels = tokens(need(s, "basis").value);
    std::map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < sc.labels.size(); ++i) index[sc.labels[i]] = i;
    for (const std::string& t : tokens(need(s, "degrees").value)) {
      if (!is_number_token(t)) fail(file, s.line, "degrees must be integers");
      sc.degrees.push_back(static_cast<int>(parse_rational(t).get_num().get_si()));
    }
    const std::size_t n = sc.labels.size();
    sc.delta.assign(n, {});
    sc.counit.assign(n, Rational(0));
    sc.antipode.assign(n, {});

    for (const auto& kv : s.entries) {
      std::vector<std::string> k = tokens(kv.key);
      try {
        if (k.size() == 1 &&
            (k[0] == "kind" || k[0] == "basis" || k[0] == "degrees")) {
          continue;
        } else if (k.size() == 1 && k[0] == "unit") {
          sc.unit = eval_lincomb(index, kv.value);
        } else if (k.size() == 1 && k[0] == "grouplikes") {
          std::vector<std::uint32_t> gl;
          for (const std::string& t : tokens(kv.value)) {
            auto it = index.find(t);
            if (it == index.end()) throw ValidationError("unknown basis label '" + t + "'");
            gl.push_back(it->second);
          }
          sc.grouplikes = std::move(gl);
        } else if (k.size() == 3 && k[0] == "mult") {
          auto a = index.find(k[1]), b = index.find(k[2]);
          if (a == index.end() || b == index.end())
            throw ValidationError("unknown basis label in mult key");
          sc.mult[{a->second, b->second}] = eval_lincomb(index, kv.value);
        } else if (k.size() == 2 && k[0] == "delta") {
          auto a = index.find(k[1]);
          if (a == index.end()) throw ValidationError("unknown basis label '" + k[1] + "'");
          sc.delta[a->second] = eval_pair_combo(index, kv.value);
        } else if (k.size() == 2 && k[0] == "counit") {
          auto a = index.find(k[1]);
          if (a == index.end()) throw ValidationError("unknown basis label '" + k[1] + "'");
          sc.counit[a->second] = parse_rational(trim(kv.value));
        } else if (k.size() == 2 && k[0] == "antipode") {
          auto a = index.find(k[1]);
          if (a == index.end()) throw ValidationError("unknown basis label '" + k[1] + "'");
          sc.antipode[a->second] = eval_lincomb(index, kv.value);
        } else {
          fail(file, kv.line, "unrecognized key '" + kv.key + "' in sc section");
        }
      } catch (const ModelError&) {
        throw;
      } catch (const HopfError& e) {
        fail(file, kv.line, e.what());
      }
    }
    model.hopfs.emplace(s.name, HopfPresentation::structure_constants(std::move(sc), degree, s.name));
  }

  void build_morphism(const Section& s) {
    const std::string sname = trim(need(s, "source").value);
    const std::string tname = trim(need(s, "target").value);
    auto src = model.hopfs.find(sname);
    if (src == model.hopfs.end()) fail(file, s.line, "unknown hopf object '" + sname + "'");
    auto tgt = model.hopfs.find(tname);
    if (tgt == model.hopfs.end()) fail(file, s.line, "unknown hopf object '" + tname + "'");

    ValidatePolicy policy = ValidatePolicy::Strict;
    if (const KeyValue* v = s.find("validate")) {
      std::string mode = trim(v->value);
      if (mode == "defer")
        policy = ValidatePolicy::Defer;
      else if (mode != "strict")
        fail(file, v->line, "validate must be 'strict' or 'defer'");
    }

    std::map<std::string, Element> images;
    for (const auto& kv : s.entries) {
      if (kv.key == "source" || kv.key == "target" || kv.key == "validate") continue;
      if (tokens(kv.key).size() != 1)
        fail(file, kv.line, "expected '<generator> = <expression>'");
      try {
        images[kv.key] = eval_expression(tgt->second, kv.value);
      } catch (const HopfError& e) {
        fail(file, kv.line, e.what());
      }
    }
    try {
      model.morphisms.emplace(
          s.name, HopfMorphism::from_generators(src->second, tgt->second, images, policy, s.name));
    } catch (const HopfError& e) {
      fail(file, s.line, e.what());
    }
  }

  void build_diagram(const Section& s) {
    DiagramSpec spec;
    spec.line = s.line;
    auto row = [&](const char* key) {
      std::vector<std::string> names = tokens(need(s, key).value);
      if (names.size() == 1) {
        if (!model.hopfs.count(names[0]))
          fail(file, s.line, "unknown hopf object '" + names[0] + "' in " + key + " row");
      } else if (names.size() == 3) {
        for (const std::string& n : names)
          if (!model.morphisms.count(n))
            fail(file, s.line, "unknown morphism '" + n + "' in " + key + " row");
      } else {
        fail(file, s.line, std::string(key) + " row must be one hopf name or three morphisms");
      }
      return names;
    };
    spec.top = row("top");
    spec.bottom = row("bottom");
    if (spec.top.size() != spec.bottom.size())
      fail(file, s.line, "top and bottom rows must both be canonical or both explicit");
    auto mor = [&](const std::string& key) {
      std::string n = trim(need(s, key).value);
      if (!model.morphisms.count(n)) fail(file, s.line, "unknown morphism '" + n + "'");
      return n;
    };
    spec.middle = mor("middle");
    if (spec.top.size() == 1) {
      if (s.find("left") || s.find("right"))
        fail(file, s.line, "canonical rows derive the left and right maps; drop those keys");
    } else {
      spec.left = mor("left");
      spec.right = mor("right");
    }
    model.diagrams.emplace(s.name, std::move(spec));
  }

  void build(const Section& s) {
    require_new(s.name, s.line);
    if (s.kind == "group")
      build_group(s);
    else if (s.kind == "lie")
      build_lie(s);
    else if (s.kind == "action")
      build_action(s);
    else if (s.kind == "hopf")
      build_hopf(s);
    else if (s.kind == "morphism")
      build_morphism(s);
    else if (s.kind == "diagram")
      build_diagram(s);
    else
      fail(file, s.line, "unknown section kind '" + s.kind + "'");
  }
};

}  // namespace

const HopfPresentation::Ptr& Model::hopf(const std::string& name) const {
  auto it = hopfs.find(name);
  if (it == hopfs.end()) throw ModelError("unknown hopf object '" + name + "'");
  return it->second;
}

const HopfMorphism& Model::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) throw ModelError("unknown morphism '" + name + "'");
  return it->second;
}

const DiagramSpec& Model::diagram(const std::string& name) const {
  auto it = diagrams.find(name);
  if (it == diagrams.end()) throw ModelError("unknown diagram '" + name + "'");
  return it->second;
}

Element eval_element(const HopfPresentation::Ptr& h, const std::string& expr) {
  return eval_expression(h, expr);
}

Model parse_model(const std::string& text, const std::string& display_name, int default_degree) {
  Builder builder;
  builder.file = display_name;
  builder.degree = default_degree;

  std::vector<Section> sections;
  Section* current = nullptr;
  bool saw_section = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (trim(raw).empty()) continue;
    bool indented = raw[0] == ' ' || raw[0] == '\t';
    std::string s = trim(raw);

    if (s.front() == '[') {
      if (s.back() != ']') fail(display_name, line, "unterminated section header");
      std::vector<std::string> parts = tokens(s.substr(1, s.size() - 2));
      if (parts.size() != 2)
        fail(display_name, line, "section header must be [kind name]");
      sections.push_back(Section{parts[0], parts[1], line, {}});
      current = &sections.back();
      saw_section = true;
      continue;
    }

    if (indented) {
      if (!current || current->entries.empty())
        fail(display_name, line, "continuation line with nothing to continue");
      current->entries.back().value += " / " + s;
      continue;
    }

    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(display_name, line, "expected 'key = value'");
    KeyValue kv{trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line};
    if (kv.key.empty()) fail(display_name, line, "empty key");

    if (!saw_section) {
      if (kv.key == "degree") {
        if (!is_number_token(kv.value)) fail(display_name, line, "degree must be an integer");
        builder.degree = static_cast<int>(parse_rational(kv.value).get_num().get_si());
        continue;
      }
      fail(display_name, line, "only 'degree = ...' may appear before the first section");
    }
    current->entries.push_back(std::move(kv));
  }

  builder.model.degree = builder.degree;
  for (const Section& s : sections) builder.build(s);
  return builder.model;
}

Model load_model(const std::string& path, int default_degree) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_model(text.str(), path, default_degree);
}

}  // namespace hopfcat
