#include "ringlab/json_io.hpp"

namespace ringlab {

namespace {

nlohmann::json bitset_json(const Bitset& b) {
    nlohmann::json out = nlohmann::json::array();
    for (auto v : b.members()) out.push_back(v);
    return out;
}

}  // namespace

nlohmann::json to_json(const RingReport& r) {
    nlohmann::json j;
    j["central_idempotents"] = r.central_idempotents;
    j["counterexamples"] = r.counterexamples;
    j["idempotents"] = r.idempotents;
    j["is_commutative"] = r.is_commutative;
    j["jacobson_radical"] = r.jacobson_radical;
    j["left_bezout"] = r.left_bezout;
    j["left_morphic"] = r.left_morphic;
    j["left_quasi_morphic"] = r.left_quasi_morphic;
    j["local"] = r.local;
    j["morphic"] = r.morphic;
    j["order"] = r.order;
    j["primitive_central_idempotents"] = r.primitive_central_idempotents;
    j["quasi_morphic"] = r.quasi_morphic;
    j["regular"] = r.regular;
    j["right_bezout"] = r.right_bezout;
    j["right_morphic"] = r.right_morphic;
    j["right_quasi_morphic"] = r.right_quasi_morphic;
    j["sampled"] = r.sampled;
    j["semisimple"] = r.semisimple;
    j["simple"] = r.simple;
    j["unit_regular"] = r.unit_regular;
    j["units"] = r.units;
    return j;
}

nlohmann::json to_json(const ClassificationVerdict& v) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : v.factors)
        factors.push_back({{"idempotent", f.idempotent},
                           {"module_order", f.module_order},
                           {"reason", f.reason},
                           {"ring_order", f.ring_order},
                           {"simple_artinian", f.simple_artinian},
                           {"verdict", f.verdict}});
    nlohmann::json j;
    j["commutation_obstruction"] = v.commutation_obstruction;
    j["factors"] = std::move(factors);
    if (v.commutation_obstruction) {
        j["failing_idempotent"] = v.failing_idempotent;
        j["failing_module_elem"] = v.failing_module_elem;
    }
    j["predicted_morphic"] = v.predicted_morphic;
    return j;
}

nlohmann::json to_json(const ReconcileReport& r) {
    nlohmann::json j;
    j["brute_force"] = r.brute_force;
    j["match"] = r.match;
    j["predicted"] = r.predicted;
    j["verdict"] = to_json(r.verdict);
    return j;
}

nlohmann::json to_json(const LatticeMap& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries)
        entries.push_back({{"generator", e.generator},
                           {"image", bitset_json(e.image)},
                           {"image_generator", e.image_generator},
                           {"image_two_sided", e.image_two_sided},
                           {"sub_bimodule", e.sub_bimodule},
                           {"submodule", bitset_json(e.submodule)}});
    nlohmann::json j;
    j["entries"] = std::move(entries);
    j["inclusion_reversing"] = m.inclusion_reversing;
    j["injective"] = m.injective;
    return j;
}

nlohmann::json to_json(const WeakBaerReport& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json je;
        je["annihilator"] = e.annihilator;
        je["element"] = e.element;
        if (e.idempotent_generator) je["idempotent_generator"] = *e.idempotent_generator;
        entries.push_back(std::move(je));
    }
    nlohmann::json j;
    j["all_annihilators_principal"] = r.all_annihilators_principal;
    j["bezout"] = r.bezout;
    j["commutative"] = r.commutative;
    j["entries"] = std::move(entries);
    j["reduced"] = r.reduced;
    j["weak_baer"] = r.weak_baer;
    return j;
}

nlohmann::json to_json(const PartnerReport& r) {
    nlohmann::json j;
    j["closed_form_ok"] = r.closed_form_ok;
    j["ok"] = r.ok();
    j["sampled_ok"] = r.sampled_ok;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

nlohmann::json to_json(const MatrixWitnessReport& r) {
    nlohmann::json j;
    j["closed_form_ok"] = r.closed_form_ok;
    j["diagonal_ok"] = r.diagonal_ok;
    j["ok"] = r.ok();
    j["sampled_ok"] = r.sampled_ok;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

template <>
BigInt parse_domain_elem<IntegerDomain>(const IntegerDomain&, const std::string& text) {
    return BigInt(text);
}

template <>
PolyElem parse_domain_elem<PolyDomain>(const PolyDomain& d, const std::string& text) {
    // sum of c*x^k | x^k | x | c terms, '-' accepted before a term
    PolyElem out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    for (;;) {
        skip();
        long long c = 1;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                c = c * 10 + (text[pos++] - '0');
            saw_coeff = true;
            skip();
            if (pos < text.size() && text[pos] == '*') ++pos;
        }
        long long deg = 0;
        skip();
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            deg = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                deg = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    deg = deg * 10 + (text[pos++] - '0');
            }
        } else if (!saw_coeff) {
            throw std::domain_error("bad polynomial literal: " + text);
        }
        if (out.c.size() < std::size_t(deg) + 1) out.c.resize(std::size_t(deg) + 1, 0);
        long long v = out.c[std::size_t(deg)] + sign * c;
        out.c[std::size_t(deg)] = static_cast<int>(((v % d.p) + d.p) % d.p);
        skip();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size()) throw std::domain_error("bad polynomial literal: " + text);
    return d.trim(std::move(out));
}

template <class D>
Fraction<D> parse_fraction(const D& d, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return reduce_fraction(d, parse_domain_elem(d, text), d.one());
    return reduce_fraction(d, parse_domain_elem(d, text.substr(0, slash)),
                           parse_domain_elem(d, text.substr(slash + 1)));
}

template Fraction<IntegerDomain> parse_fraction<IntegerDomain>(const IntegerDomain&,
                                                               const std::string&);
template Fraction<PolyDomain> parse_fraction<PolyDomain>(const PolyDomain&, const std::string&);

}  // namespace ringlab
