#include "crossprod/certificate.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "crossprod/parse.hpp"

namespace crossprod {

namespace {

constexpr const char* kHeader = "crossprod-certificate-v1";

class CertWriter {
public:
    explicit CertWriter(const std::string& kind, const AlgebraPresentation& pres) {
        out_ << kHeader << "\n";
        key("kind", kind);
        key("order", "deglex");
        key("presentation-hash", pres.content_hash());
        out_ << "presentation-begin\n" << pres.canonical_text() << "presentation-end\n";
    }

    void key(const std::string& k, const std::string& v) { out_ << k << " = " << v << "\n"; }
    void key(const std::string& k, long v) { key(k, std::to_string(v)); }

    std::string finish() {
        std::string body = out_.str();
        return body + "cert-hash = " + fnv1a_hex(body) + "\n";
    }

private:
    std::ostringstream out_;
};

struct ParsedCert {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string presentation_text;

    const std::string* find(const std::string& k) const {
        for (const auto& [key, value] : entries)
            if (key == k) return &value;
        return nullptr;
    }
    std::string need(const std::string& k) const {
        const std::string* v = find(k);
        if (!v) throw std::invalid_argument("certificate: missing key '" + k + "'");
        return *v;
    }
    long need_int(const std::string& k) const { return std::stol(need(k)); }
};

ParsedCert parse_certificate(const std::string& text) {
    ParsedCert cert;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::invalid_argument("certificate: bad header");
    bool in_pres = false;
    std::string body = std::string(kHeader) + "\n";
    std::string recorded_hash;
    while (std::getline(in, line)) {
        if (line == "presentation-begin") {
            in_pres = true;
            body += line + "\n";
            continue;
        }
        if (line == "presentation-end") {
            in_pres = false;
            body += line + "\n";
            continue;
        }
        if (in_pres) {
            cert.presentation_text += line + "\n";
            body += line + "\n";
            continue;
        }
        auto eq = line.find(" = ");
        if (eq == std::string::npos) {
            if (line.empty()) {
                body += "\n";
                continue;
            }
            throw std::invalid_argument("certificate: malformed line '" + line + "'");
        }
        std::string k = line.substr(0, eq), v = line.substr(eq + 3);
        if (k == "cert-hash") {
            recorded_hash = v;
            if (fnv1a_hex(body) != v)
                throw std::invalid_argument("certificate: content hash mismatch");
            continue;
        }
        cert.entries.emplace_back(k, v);
        body += line + "\n";
    }
    if (recorded_hash.empty()) throw std::invalid_argument("certificate: missing cert-hash");
    return cert;
}

std::string estr(const CrossedElement& e, const AlgebraPresentation& pres) {
    return element_str(e, pres, OrderRule::Deglex);
}

void write_ideal_body(CertWriter& w, const IdealSpec& ideal, const AlgebraPresentation& pres) {
    const char* prov = ideal.provenance == IdealSpec::Provenance::Syzygy
                           ? "syzygy"
                           : ideal.provenance == IdealSpec::Provenance::LiftedFromA1
                                 ? "lifted-from-a1"
                                 : "user";
    w.key("provenance", prov);
    if (!ideal.sub_presentation_hash.empty())
        w.key("sub-presentation-hash", ideal.sub_presentation_hash);
    if (!ideal.a.is_zero()) {
        w.key("source.a", estr(ideal.a, pres));
        w.key("source.b", estr(ideal.b, pres));
        w.key("syzygy-bound", ideal.syzygy_bound);
    }
    w.key("generators", static_cast<long>(ideal.generators.size()));
    for (size_t i = 0; i < ideal.generators.size(); ++i)
        w.key("generator." + std::to_string(i + 1), estr(ideal.generators[i], pres));
    for (size_t i = 0; i < ideal.syzygies.size(); ++i) {
        w.key("syzygy." + std::to_string(i + 1) + ".s", estr(ideal.syzygies[i].first, pres));
        w.key("syzygy." + std::to_string(i + 1) + ".t", estr(ideal.syzygies[i].second, pres));
    }
}

IdealSpec read_ideal_body(const ParsedCert& cert, const AlgebraPresentation& pres) {
    IdealSpec ideal;
    std::string prov = cert.need("provenance");
    ideal.provenance = prov == "syzygy" ? IdealSpec::Provenance::Syzygy
                       : prov == "lifted-from-a1" ? IdealSpec::Provenance::LiftedFromA1
                                                  : IdealSpec::Provenance::User;
    if (const std::string* h = cert.find("sub-presentation-hash"))
        ideal.sub_presentation_hash = *h;
    if (const std::string* a = cert.find("source.a")) {
        ideal.a = parse_element(*a, pres);
        ideal.b = parse_element(cert.need("source.b"), pres);
        ideal.syzygy_bound = static_cast<int>(cert.need_int("syzygy-bound"));
    }
    long k = cert.need_int("generators");
    for (long i = 1; i <= k; ++i)
        ideal.generators.push_back(
            parse_element(cert.need("generator." + std::to_string(i)), pres));
    for (long i = 1; i <= k; ++i) {
        const std::string* s = cert.find("syzygy." + std::to_string(i) + ".s");
        if (!s) break;
        ideal.syzygies.emplace_back(
            parse_element(*s, pres),
            parse_element(cert.need("syzygy." + std::to_string(i) + ".t"), pres));
    }
    return ideal;
}

void verify_ideal_body(const IdealSpec& ideal, const AlgebraPresentation& pres) {
    if (ideal.syzygies.size() != ideal.generators.size())
        throw std::invalid_argument("ideal: generator/syzygy count mismatch");
    for (size_t i = 0; i < ideal.generators.size(); ++i) {
        if (ideal.generators[i].is_zero())
            throw std::invalid_argument("ideal: zero generator");
        CrossedElement as = multiply(pres, ideal.a, ideal.syzygies[i].first);
        CrossedElement bt = multiply(pres, ideal.b, ideal.syzygies[i].second);
        if (as != ideal.generators[i] || ideal.generators[i] != ce_neg(bt))
            throw std::invalid_argument("ideal: generator identity a*s = gen = -b*t fails");
    }
}

}  // namespace

std::string certificate_unimodular_row(const UnimodularRow& row,
                                       const AlgebraPresentation& pres) {
    CertWriter w("unimodular-row", pres);
    w.key("entries", static_cast<long>(row.entries.size()));
    for (size_t i = 0; i < row.entries.size(); ++i)
        w.key("row." + std::to_string(i + 1), estr(row.entries[i], pres));
    for (size_t i = 0; i < row.cofactors.size(); ++i)
        w.key("cofactor." + std::to_string(i + 1), estr(row.cofactors[i], pres));
    return w.finish();
}

std::string certificate_stable_freeness(const StableFreenessWitness& witness,
                                        const AlgebraPresentation& pres) {
    CertWriter w("stable-freeness", pres);
    const size_t k = witness.row.size();
    w.key("entries", static_cast<long>(k));
    for (size_t i = 0; i < k; ++i)
        w.key("row." + std::to_string(i + 1), estr(witness.row[i], pres));
    for (size_t i = 0; i < k; ++i)
        w.key("col." + std::to_string(i + 1), estr(witness.col[i], pres));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            w.key("idempotent." + std::to_string(i + 1) + "." + std::to_string(j + 1),
                  estr(witness.idempotent[i][j], pres));
    w.key("trace", estr(witness.trace, pres));
    if (witness.rank) w.key("rank", static_cast<long>(*witness.rank));
    return w.finish();
}

std::string certificate_intersection_ideal(const IdealSpec& ideal,
                                           const AlgebraPresentation& pres) {
    CertWriter w("intersection-ideal", pres);
    write_ideal_body(w, ideal, pres);
    return w.finish();
}

std::string certificate_noncyclicity(const IdealSpec& ideal, const NonCyclicityCertificate& cert,
                                     const AlgebraPresentation& pres) {
    CertWriter w("noncyclicity", pres);
    write_ideal_body(w, ideal, pres);
    w.key("method", cert.method);
    w.key("degree-cap", cert.degree_cap);
    w.key("cofactor-bound", cert.cofactor_bound);
    w.key("d0", cert.d0);
    w.key("d-witness", cert.d_witness);
    w.key("dim-ideal-at-witness", cert.dim_ideal_at_witness);
    w.key("dim-full-at-witness", cert.dim_full_at_witness);
    for (const auto& [d, v] : cert.dim_ideal) w.key("dim-ideal." + std::to_string(d), v);
    for (int e = 0; e <= cert.degree_cap - cert.d0; ++e)
        w.key("dim-full." + std::to_string(e), pbw_count(pres, e));
    return w.finish();
}

VerifyResult verify_certificate(const std::string& text) {
    VerifyResult res;
    try {
        ParsedCert cert = parse_certificate(text);
        res.kind = cert.need("kind");
        if (cert.need("order") != "deglex")
            throw std::invalid_argument("certificate: unsupported order");
        AlgebraPresentation pres = AlgebraPresentation::parse(cert.presentation_text);
        if (pres.content_hash() != cert.need("presentation-hash"))
            throw std::invalid_argument("certificate: presentation hash mismatch");
        auto parse_vec = [&](const std::string& prefix, long k) {
            std::vector<CrossedElement> v;
            for (long i = 1; i <= k; ++i)
                v.push_back(parse_element(cert.need(prefix + "." + std::to_string(i)), pres));
            return v;
        };
        if (res.kind == "unimodular-row") {
            long k = cert.need_int("entries");
            make_verified_row(parse_vec("row", k), parse_vec("cofactor", k), pres);
        } else if (res.kind == "stable-freeness") {
            long k = cert.need_int("entries");
            UnimodularRow row{parse_vec("row", k), parse_vec("col", k)};
            StableFreenessWitness w = certify_stably_free(row, pres);
            for (long i = 1; i <= k; ++i)
                for (long j = 1; j <= k; ++j) {
                    std::string key = "idempotent." + std::to_string(i) + "." + std::to_string(j);
                    if (estr(w.idempotent[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                             pres) != cert.need(key))
                        throw std::invalid_argument("certificate: idempotent entry mismatch");
                }
            if (estr(w.trace, pres) != cert.need("trace"))
                throw std::invalid_argument("certificate: trace mismatch");
            if (const std::string* r = cert.find("rank")) {
                if (!w.rank || std::to_string(*w.rank) != *r)
                    throw std::invalid_argument("certificate: rank mismatch");
            }
        } else if (res.kind == "intersection-ideal") {
            IdealSpec ideal = read_ideal_body(cert, pres);
            verify_ideal_body(ideal, pres);
        } else if (res.kind == "noncyclicity") {
            IdealSpec ideal = read_ideal_body(cert, pres);
            if (!ideal.a.is_zero()) verify_ideal_body(ideal, pres);
            int cap = static_cast<int>(cert.need_int("degree-cap"));
            int cofactor_bound = static_cast<int>(cert.need_int("cofactor-bound"));
            NonCyclicityOutcome out = certify_noncyclic(ideal, cap, cofactor_bound, pres);
            if (out.status != NonCyclicityOutcome::Status::Certified)
                throw std::invalid_argument("certificate: recomputation yields no certificate");
            const NonCyclicityCertificate& c = *out.cert;
            if (c.method != cert.need("method"))
                throw std::invalid_argument("certificate: method mismatch");
            if (c.d0 != cert.need_int("d0") || c.d_witness != cert.need_int("d-witness") ||
                c.dim_ideal_at_witness != cert.need_int("dim-ideal-at-witness") ||
                c.dim_full_at_witness != cert.need_int("dim-full-at-witness"))
                throw std::invalid_argument("certificate: witness data mismatch");
            for (const auto& [d, v] : c.dim_ideal) {
                if (v != cert.need_int("dim-ideal." + std::to_string(d)))
                    throw std::invalid_argument("certificate: dimension table mismatch");
            }
            for (int e = 0; e <= c.degree_cap - c.d0; ++e) {
                if (pbw_count(pres, e) != cert.need_int("dim-full." + std::to_string(e)))
                    throw std::invalid_argument("certificate: basis count mismatch");
            }
        } else {
            throw std::invalid_argument("certificate: unknown kind '" + res.kind + "'");
        }
        res.ok = true;
    } catch (const std::exception& ex) {
        res.ok = false;
        res.reason = ex.what();
    }
    return res;
}

}  // namespace crossprod
