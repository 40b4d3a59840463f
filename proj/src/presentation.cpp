#include "crossprod/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "crossprod/parse.hpp"

namespace crossprod {

std::vector<std::pair<int, Rational>> LiePresentation::bracket(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    auto it = brackets.find(key);
    if (it == brackets.end()) return {};
    if (!flip) return it->second;
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [k, c] : it->second) out.emplace_back(k, -c);
    return out;
}

CommPoly LiePresentation::cocycle(int i, int j, int nvars) const {
    if (i == j) return CommPoly::zero(nvars);
    bool flip = i > j;
    auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    auto it = cocycles.find(key);
    if (it == cocycles.end()) return CommPoly::zero(nvars);
    return flip ? neg(it->second) : it->second;
}

namespace {

// Lie element as a dense coefficient vector over the generator basis.
using LieVec = std::vector<Rational>;

LieVec bracket_basis(const LiePresentation& lie, int i, int j) {
    LieVec v(static_cast<size_t>(lie.n()), Rational(0));
    for (const auto& [k, c] : lie.bracket(i, j)) v.at(static_cast<size_t>(k)) += c;
    return v;
}

LieVec bracket_vec_basis(const LiePresentation& lie, const LieVec& u, int k) {
    LieVec v(static_cast<size_t>(lie.n()), Rational(0));
    for (int m = 0; m < lie.n(); ++m) {
        if (u[static_cast<size_t>(m)].is_zero()) continue;
        LieVec w = bracket_basis(lie, m, k);
        for (int t = 0; t < lie.n(); ++t)
            v[static_cast<size_t>(t)] += u[static_cast<size_t>(m)] * w[static_cast<size_t>(t)];
    }
    return v;
}

}  // namespace

void LiePresentation::validate_jacobi() const {
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            for (int k = j + 1; k < n(); ++k) {
                LieVec s(static_cast<size_t>(n()), Rational(0));
                auto acc = [&](const LieVec& v) {
                    for (int t = 0; t < n(); ++t) s[static_cast<size_t>(t)] += v[static_cast<size_t>(t)];
                };
                acc(bracket_vec_basis(*this, bracket_basis(*this, i, j), k));
                acc(bracket_vec_basis(*this, bracket_basis(*this, j, k), i));
                acc(bracket_vec_basis(*this, bracket_basis(*this, k, i), j));
                for (int t = 0; t < n(); ++t) {
                    if (!s[static_cast<size_t>(t)].is_zero())
                        throw std::invalid_argument(
                            "Jacobi identity fails on generators (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                }
            }
}

void AlgebraPresentation::validate() const {
    const int n = num_generators();
    const int m = num_vars();
    for (const auto& [key, entries] : lie.brackets) {
        if (key.first < 0 || key.second <= key.first || key.second >= n)
            throw std::invalid_argument("bracket index out of range");
        for (const auto& [k, c] : entries)
            if (k < 0 || k >= n) throw std::invalid_argument("bracket target out of range");
    }
    for (const auto& [key, p] : lie.cocycles) {
        if (key.first < 0 || key.second <= key.first || key.second >= n)
            throw std::invalid_argument("cocycle index out of range");
        if (p.nvars != m) throw std::invalid_argument("cocycle variable count mismatch");
    }
    if (static_cast<int>(derivations.deltas.size()) != n)
        throw std::invalid_argument("derivation table size mismatch");
    for (const auto& d : derivations.deltas)
        if (static_cast<int>(d.images.size()) != m)
            throw std::invalid_argument("derivation image count mismatch");
    if (base.quotient) base.quotient->validate();
    {
        // Declared names must be unique and distinct from variable names.
        std::vector<std::string> all = base.var_names;
        all.insert(all.end(), lie.generator_names.begin(), lie.generator_names.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw std::invalid_argument("duplicate variable/generator name");
    }
    // Jacobi is consistency_check's job: broken structure constants must be
    // reportable as a value, not a parse failure.
}

std::string AlgebraPresentation::canonical_text() const {
    std::ostringstream out;
    out << "[base]\n";
    out << "vars =";
    for (size_t i = 0; i < base.var_names.size(); ++i)
        out << (i ? ", " : " ") << base.var_names[i];
    out << "\n";
    if (base.quotient) {
        out << "relation = " << poly_str(base.quotient->relation, base.var_names) << "\n";
        out << "relation_var = "
            << base.var_names.at(static_cast<size_t>(base.quotient->eliminated_variable)) << "\n";
        out << "relation_power = " << base.quotient->leading_exponent << "\n";
    }
    out << "\n[lie]\n";
    out << "generators =";
    for (size_t i = 0; i < lie.generator_names.size(); ++i)
        out << (i ? ", " : " ") << lie.generator_names[i];
    out << "\n";
    for (const auto& [key, entries] : lie.brackets) {
        if (entries.empty()) continue;
        out << "bracket." << key.first + 1 << "." << key.second + 1 << " = [";
        bool first = true;
        for (const auto& [k, c] : entries) {
            if (c.is_zero()) continue;
            if (!first) out << ", ";
            out << "[" << k + 1 << ", " << c.str() << "]";
            first = false;
        }
        out << "]\n";
    }
    for (const auto& [key, p] : lie.cocycles) {
        if (p.is_zero()) continue;
        out << "cocycle." << key.first + 1 << "." << key.second + 1 << " = \""
            << poly_str(p, base.var_names) << "\"\n";
    }
    bool any_delta = false;
    for (const auto& d : derivations.deltas)
        if (!d.is_zero()) any_delta = true;
    if (any_delta) {
        out << "\n[action]\n";
        for (size_t i = 0; i < derivations.deltas.size(); ++i) {
            for (size_t v = 0; v < derivations.deltas[i].images.size(); ++v) {
                const CommPoly& im = derivations.deltas[i].images[v];
                if (im.is_zero()) continue;
                out << "delta." << lie.generator_names[i] << "." << base.var_names[v] << " = \""
                    << poly_str(im, base.var_names) << "\"\n";
            }
        }
    }
    return out.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(bytes);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return s;
}

std::string AlgebraPresentation::content_hash() const { return fnv1a_hex(canonical_text()); }

AlgebraPresentation AlgebraPresentation::restrict_to_first_generator() const {
    if (num_generators() < 1)
        throw std::invalid_argument("restrict_to_first_generator: no generators");
    AlgebraPresentation sub;
    sub.base = base;
    sub.lie.generator_names = {lie.generator_names.at(0)};
    sub.derivations.deltas = {derivations.deltas.at(0)};
    return sub;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

}  // namespace

AlgebraPresentation AlgebraPresentation::parse(const std::string& text) {
    AlgebraPresentation pres;
    std::istringstream in(text);
    std::string line, section;
    struct Pending {
        std::string key, value;
        std::string section;
    };
    std::vector<Pending> entries;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            section = t.substr(1, t.size() - 2);
            if (section != "base" && section != "lie" && section != "action")
                throw std::invalid_argument("unknown presentation section [" + section + "]");
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("presentation line without '=': " + t);
        entries.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1)), section});
    }
    // Pass 1: names.
    std::string relation_text, relation_var;
    int relation_power = 0;
    for (const auto& e : entries) {
        if (e.section == "base" && e.key == "vars") pres.base.var_names = split_list(e.value, ',');
        if (e.section == "lie" && e.key == "generators")
            pres.lie.generator_names = split_list(e.value, ',');
    }
    const int m = pres.num_vars();
    const int n = pres.num_generators();
    pres.derivations.deltas.assign(static_cast<size_t>(n), DerivationSpec::zero(m));
    auto var_index = [&](const std::string& name) {
        for (int v = 0; v < m; ++v)
            if (pres.base.var_names[static_cast<size_t>(v)] == name) return v;
        throw std::invalid_argument("unknown base variable '" + name + "'");
    };
    auto gen_index = [&](const std::string& name) {
        for (int g = 0; g < n; ++g)
            if (pres.lie.generator_names[static_cast<size_t>(g)] == name) return g;
        for (int g = 0; g < n; ++g)
            if (canonical_gen_name(g) == name) return g;
        throw std::invalid_argument("unknown generator '" + name + "'");
    };
    // Pass 2: everything else (relation last, since quotient changes reduction).
    for (const auto& e : entries) {
        if (e.section == "base") {
            if (e.key == "vars") continue;
            if (e.key == "relation") {
                relation_text = unquote(e.value);
            } else if (e.key == "relation_var") {
                relation_var = e.value;
            } else if (e.key == "relation_power") {
                relation_power = std::stoi(e.value);
            } else {
                throw std::invalid_argument("unknown base key '" + e.key + "'");
            }
        } else if (e.section == "lie") {
            if (e.key == "generators") continue;
            auto parts = split_list(e.key, '.');
            if (parts.size() != 3)
                throw std::invalid_argument("unknown lie key '" + e.key + "'");
            int i = std::stoi(parts[1]) - 1, j = std::stoi(parts[2]) - 1;
            if (i < 0 || j <= i || j >= n)
                throw std::invalid_argument("lie key indices out of range: " + e.key);
            if (parts[0] == "bracket") {
                // Parse "[[k, c], ...]" inline.
                std::vector<std::pair<int, Rational>> bs;
                std::string v = e.value;
                size_t p = 0;
                auto next_entry = [&]() -> bool {
                    size_t open = v.find('[', p + 1);
                    if (open == std::string::npos) return false;
                    size_t close = v.find(']', open);
                    if (close == std::string::npos)
                        throw std::invalid_argument("malformed bracket list: " + v);
                    std::string body = v.substr(open + 1, close - open - 1);
                    auto kv = split_list(body, ',');
                    if (kv.size() != 2)
                        throw std::invalid_argument("bracket entry needs [k, c]: " + body);
                    int k = std::stoi(kv[0]) - 1;
                    if (k < 0 || k >= n)
                        throw std::invalid_argument("bracket target out of range: " + body);
                    bs.emplace_back(k, Rational::from_string(kv[1]));
                    p = close + 1;
                    return true;
                };
                if (trim(v).empty() || trim(v).front() != '[')
                    throw std::invalid_argument("malformed bracket list: " + v);
                while (next_entry()) {
                }
                std::sort(bs.begin(), bs.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (!bs.empty()) pres.lie.brackets[{i, j}] = std::move(bs);
            } else if (parts[0] == "cocycle") {
                CommPoly p = parse_poly(unquote(e.value), pres.base);
                if (!p.is_zero()) pres.lie.cocycles[{i, j}] = std::move(p);
            } else {
                throw std::invalid_argument("unknown lie key '" + e.key + "'");
            }
        } else if (e.section == "action") {
            auto parts = split_list(e.key, '.');
            if (parts.size() != 3 || parts[0] != "delta")
                throw std::invalid_argument("unknown action key '" + e.key + "'");
            int g = gen_index(parts[1]);
            int v = var_index(parts[2]);
            pres.derivations.deltas[static_cast<size_t>(g)].images[static_cast<size_t>(v)] =
                parse_poly(unquote(e.value), pres.base);
        } else {
            throw std::invalid_argument("presentation entry outside any section: " + e.key);
        }
    }
    if (!relation_text.empty()) {
        QuotientPresentation q;
        BaseDomain plain{pres.base.var_names, std::nullopt};
        q.relation = parse_poly(relation_text, plain);
        q.eliminated_variable = var_index(relation_var);
        q.leading_exponent = relation_power;
        q.validate();
        pres.base.quotient = std::move(q);
    }
    pres.validate();
    return pres;
}

namespace {

AlgebraPresentation make_weyl() {
    return AlgebraPresentation::parse(
        "[base]\nvars = x\n[lie]\ngenerators = d\n[action]\ndelta.d.x = 1\n");
}

AlgebraPresentation make_weyl_ext_abelian() {
    return AlgebraPresentation::parse(
        "[base]\nvars = x\n[lie]\ngenerators = d, g2\n[action]\ndelta.d.x = 1\n");
}

AlgebraPresentation make_heisenberg() {
    return AlgebraPresentation::parse(
        "[base]\nvars =\n[lie]\ngenerators = g1, g2, g3\nbracket.1.2 = [[3, 1]]\n");
}

AlgebraPresentation make_heisenberg_ext() {
    return AlgebraPresentation::parse(
        "[base]\nvars = x\n[lie]\ngenerators = d, g2, g3\nbracket.1.2 = [[3, 1]]\n"
        "[action]\ndelta.d.x = 1\n");
}

AlgebraPresentation make_sphere(int n) {
    if (n < 3) throw std::invalid_argument("sphere:<n> needs n >= 3");
    std::ostringstream t;
    t << "[base]\nvars =";
    for (int i = 1; i <= n; ++i) t << (i > 1 ? ", x" : " x") << i;
    t << "\nrelation =";
    for (int i = 1; i <= n; ++i) t << (i > 1 ? " + x" : " x") << i << "^2";
    t << " - 1\nrelation_var = x" << n << "\nrelation_power = 2\n[lie]\ngenerators =\n";
    return AlgebraPresentation::parse(t.str());
}

AlgebraPresentation make_poly(int m) {
    if (m < 0) throw std::invalid_argument("poly:<m> needs m >= 0");
    std::ostringstream t;
    t << "[base]\nvars =";
    for (int i = 1; i <= m; ++i) t << (i > 1 ? ", x" : " x") << i;
    t << "\n[lie]\ngenerators =\n";
    return AlgebraPresentation::parse(t.str());
}

}  // namespace

bool AlgebraPresentation::is_preset_name(const std::string& name) {
    if (name == "weyl" || name == "weyl-ext-abelian" || name == "heisenberg" ||
        name == "heisenberg-ext")
        return true;
    return name.rfind("sphere:", 0) == 0 || name.rfind("poly:", 0) == 0;
}

AlgebraPresentation AlgebraPresentation::preset(const std::string& name) {
    if (name == "weyl") return make_weyl();
    if (name == "weyl-ext-abelian") return make_weyl_ext_abelian();
    if (name == "heisenberg") return make_heisenberg();
    if (name == "heisenberg-ext") return make_heisenberg_ext();
    if (name.rfind("sphere:", 0) == 0) return make_sphere(std::stoi(name.substr(7)));
    if (name.rfind("poly:", 0) == 0) return make_poly(std::stoi(name.substr(5)));
    throw std::invalid_argument("unknown preset '" + name + "'");
}

AlgebraPresentation AlgebraPresentation::load(const std::string& name_or_path) {
    if (is_preset_name(name_or_path)) return preset(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("cannot open presentation '" + name_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace crossprod
