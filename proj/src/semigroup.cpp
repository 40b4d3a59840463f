#include "crossprod/semigroup.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace crossprod {

void FiniteSemigroupSample::validate() const {
    const int n = size();
    if (n == 0) throw std::invalid_argument("semigroup sample: empty");
    if (static_cast<int>(op.size()) != n)
        throw std::invalid_argument("semigroup sample: table size mismatch");
    for (const auto& row : op)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("semigroup sample: table row size mismatch");
    for (int a = 0; a < n; ++a) {
        if (op[static_cast<size_t>(zero)][static_cast<size_t>(a)] != a ||
            op[static_cast<size_t>(a)][static_cast<size_t>(zero)] != a)
            throw std::invalid_argument("semigroup sample: zero is not neutral");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (op[a][b] != op[b][a])
                throw std::invalid_argument("semigroup sample: operation not commutative");
            if (op[a][b] < -1 || op[a][b] >= n)
                throw std::invalid_argument("semigroup sample: table entry out of range");
        }
    // Associativity wherever all intermediate products stay in the sample.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = op[a][b];
            if (ab < 0) continue;
            for (int c = 0; c < n; ++c) {
                int bc = op[b][c];
                if (bc < 0) continue;
                int l = op[ab][c], r = op[a][bc];
                if (l >= 0 && r >= 0 && l != r)
                    throw std::invalid_argument("semigroup sample: operation not associative");
            }
        }
}

namespace {

FiniteSemigroupSample make_nat(int bound, bool use_max) {
    FiniteSemigroupSample s;
    for (int i = 0; i <= bound; ++i) s.names.push_back(std::to_string(i));
    s.op.assign(s.names.size(), std::vector<int>(s.names.size(), -1));
    for (int a = 0; a <= bound; ++a)
        for (int b = 0; b <= bound; ++b) {
            int r = use_max ? std::max(a, b) : a + b;
            s.op[a][b] = r <= bound ? r : -1;
        }
    s.zero = 0;
    return s;
}

FiniteSemigroupSample make_natk(int k, int bound) {
    FiniteSemigroupSample s;
    int n = 1;
    for (int i = 0; i < k; ++i) n *= bound + 1;
    auto decode = [&](int id) {
        std::vector<int> t(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            t[static_cast<size_t>(i)] = id % (bound + 1);
            id /= bound + 1;
        }
        return t;
    };
    for (int id = 0; id < n; ++id) {
        auto t = decode(id);
        std::string name = "(";
        for (int i = 0; i < k; ++i) {
            if (i) name += ",";
            name += std::to_string(t[static_cast<size_t>(i)]);
        }
        name += ")";
        s.names.push_back(name);
    }
    s.op.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (int b = 0; b < n; ++b) {
            auto tb = decode(b);
            bool in = true;
            int id = 0, mult = 1;
            for (int i = 0; i < k; ++i) {
                int e = ta[static_cast<size_t>(i)] + tb[static_cast<size_t>(i)];
                if (e > bound) {
                    in = false;
                    break;
                }
                id += e * mult;
                mult *= bound + 1;
            }
            s.op[a][b] = in ? id : -1;
        }
    }
    s.zero = 0;
    return s;
}

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

FiniteSemigroupSample FiniteSemigroupSample::builtin(const std::string& spec) {
    auto parts = split_colon(spec);
    try {
        if (parts.size() == 2 && parts[0] == "nat-plus") return make_nat(std::stoi(parts[1]), false);
        if (parts.size() == 2 && parts[0] == "nat-max") return make_nat(std::stoi(parts[1]), true);
        if (parts.size() == 3 && parts[0] == "natk-plus")
            return make_natk(std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::invalid_argument&) {
    }
    throw std::invalid_argument("unknown semigroup sample '" + spec +
                                "' (expected nat-plus:<b>, nat-max:<b>, natk-plus:<k>:<b>)");
}

FiniteSemigroupSample FiniteSemigroupSample::load(std::istream& in) {
    FiniteSemigroupSample s;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (s.names.empty()) {
            s.names = toks;
            continue;
        }
        std::vector<int> row;
        for (const auto& t : toks) {
            if (t == "-") {
                row.push_back(-1);
                continue;
            }
            auto it = std::find(s.names.begin(), s.names.end(), t);
            if (it == s.names.end())
                throw std::invalid_argument("semigroup table: unknown element '" + t + "'");
            row.push_back(static_cast<int>(it - s.names.begin()));
        }
        s.op.push_back(std::move(row));
    }
    s.zero = 0;
    s.validate();
    return s;
}

int nu_count(const std::vector<int>& s1, const std::vector<int>& s2, int c,
             const FiniteSemigroupSample& sample) {
    int count = 0;
    for (int a : s1)
        for (int b : s2)
            if (sample.op[static_cast<size_t>(a)][static_cast<size_t>(b)] == c) ++count;
    return count;
}

PairCheck check_pair(const std::vector<int>& s1, const std::vector<int>& s2,
                     const FiniteSemigroupSample& sample, bool strict) {
    PairCheck r;
    std::vector<int> counts(static_cast<size_t>(sample.size()), 0);
    std::vector<int> touched;
    for (int a : s1)
        for (int b : s2) {
            int c = sample.op[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (c < 0) return r;  // escapes the truncation: not applicable
            if (counts[static_cast<size_t>(c)]++ == 0) touched.push_back(c);
        }
    bool only_zero = touched.size() == 1 && touched[0] == sample.zero;
    if (only_zero) return r;  // S = {0}: vacuous
    r.applicable = true;
    for (int c : touched) {
        if (strict && c == sample.zero) continue;
        if (counts[static_cast<size_t>(c)] == 1) {
            r.ok = true;
            r.unique_c = c;
            return r;
        }
    }
    return r;
}

namespace {

void enumerate_subsets(int n, int size_bound, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == size_bound) return;
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    // Canonical order: by size, then lexicographically on element indices.
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

}  // namespace

OrderedLikeReport check_ordered_like(const FiniteSemigroupSample& sample, int subset_size_bound,
                                     bool strict) {
    OrderedLikeReport rep;
    sample.validate();
    // (i) no nonzero invertibles.
    for (int a = 0; a < sample.size(); ++a)
        for (int b = 0; b < sample.size(); ++b) {
            if (a == sample.zero) continue;
            if (sample.op[static_cast<size_t>(a)][static_cast<size_t>(b)] == sample.zero) {
                rep.verdict = OrderedLikeReport::Verdict::Fail;
                rep.witness_s1 = {a};
                rep.witness_s2 = {b};
                rep.note = "nonzero invertible element";
                return rep;
            }
        }
    std::vector<std::vector<int>> subsets;
    enumerate_subsets(sample.size(), subset_size_bound, subsets);
    // Cheap closure pre-filter: an escaping sum exists iff some pointwise sum
    // escapes; checked inside check_pair, but pairs of singleton maxima escape
    // first, so order the scan canonically and count skips.
    for (size_t i = 0; i < subsets.size(); ++i) {
        for (size_t j = i; j < subsets.size(); ++j) {  // op commutative: S1 <= S2 suffices
            PairCheck pc = check_pair(subsets[i], subsets[j], sample, strict);
            if (!pc.applicable) {
                ++rep.skipped;
                continue;
            }
            ++rep.checked;
            if (!pc.ok) {
                rep.verdict = OrderedLikeReport::Verdict::Fail;
                rep.witness_s1 = subsets[i];
                rep.witness_s2 = subsets[j];
                rep.note = "no element with a unique decomposition";
                return rep;
            }
        }
    }
    if (rep.checked == 0) {
        rep.verdict = OrderedLikeReport::Verdict::Inconclusive;
        rep.note = "all subset pairs escape the truncation";
    } else {
        rep.verdict = OrderedLikeReport::Verdict::Pass;
    }
    return rep;
}

std::string OrderedLikeReport::str(const FiniteSemigroupSample& sample) const {
    std::string s;
    s += "verdict = ";
    s += verdict == Verdict::Pass ? "pass" : verdict == Verdict::Fail ? "fail" : "inconclusive";
    s += "\nchecked-pairs = " + std::to_string(checked);
    s += "\nskipped-pairs = " + std::to_string(skipped) + "\n";
    if (verdict == Verdict::Fail) {
        auto set_str = [&](const std::vector<int>& set) {
            std::string t = "{";
            for (size_t i = 0; i < set.size(); ++i) {
                if (i) t += ",";
                t += sample.names[static_cast<size_t>(set[i])];
            }
            return t + "}";
        };
        s += "witness.s1 = " + set_str(witness_s1) + "\n";
        s += "witness.s2 = " + set_str(witness_s2) + "\n";
        s += "witness.note = " + note + "\n";
    } else if (!note.empty()) {
        s += "note = " + note + "\n";
    }
    return s;
}

namespace {

// Deterministic small-integer draw; avoids std::uniform_int_distribution whose
// output is implementation-defined.
int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ExpTuple draw_tuple(std::mt19937_64& rng, int length) {
    ExpTuple t(static_cast<size_t>(length));
    for (auto& e : t) {
        // Zero-heavy support so trimmed lengths vary.
        int r = draw(rng, 0, 9);
        e = r < 4 ? 0 : r - 4;
    }
    return t;
}

}  // namespace

WellOrderReport well_order_compatibility_check(const TupleComparator& cmp, int length, long trials,
                                               std::uint64_t seed) {
    WellOrderReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    for (long t = 0; t < trials; ++t) {
        ExpTuple a = draw_tuple(rng, length);
        ExpTuple b = draw_tuple(rng, length);
        ExpTuple c = draw_tuple(rng, length);
        Ordering ab = cmp(a, b);
        Ordering ba = cmp(b, a);
        bool total_ok =
            (ab == Ordering::Equal && ba == Ordering::Equal && a == b) ||
            (ab == Ordering::Less && ba == Ordering::Greater) ||
            (ab == Ordering::Greater && ba == Ordering::Less) || (a == b && ab == Ordering::Equal);
        bool translation_ok = cmp(tuple_add(a, c), tuple_add(b, c)) == ab;
        if (!total_ok || !translation_ok) {
            rep.pass = false;
            rep.witness_a = a;
            rep.witness_b = b;
            rep.witness_c = c;
            rep.note = total_ok ? "translation invariance violated" : "totality violated";
            return rep;
        }
    }
    return rep;
}

WellOrderReport well_order_compatibility_check(OrderRule rule, int length, long trials,
                                               std::uint64_t seed) {
    return well_order_compatibility_check(
        [rule](const ExpTuple& a, const ExpTuple& b) { return compare(a, b, rule); }, length,
        trials, seed);
}

std::string WellOrderReport::str() const {
    std::string s = "verdict = ";
    s += pass ? "pass" : "fail";
    s += "\ntrials = " + std::to_string(trials) + "\n";
    if (!pass) {
        s += "witness.a = " + tuple_str(witness_a) + "\n";
        s += "witness.b = " + tuple_str(witness_b) + "\n";
        s += "witness.c = " + tuple_str(witness_c) + "\n";
        s += "witness.note = " + note + "\n";
    }
    return s;
}

}  // namespace crossprod
