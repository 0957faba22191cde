#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/catalog.hpp"
#include "ringlab/json_io.hpp"

using namespace ringlab;

namespace {

struct RunConfig {
    std::uint64_t order_cap = 65536;
    std::uint32_t full_scan_cap = 4096;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 0;
    long denominator_bound = 1000000;
    long degree_bound = 12;
    std::string format = "text";

    RingCaps ring_caps() const {
        return RingCaps{order_cap, 256, sample_count, seed};
    }
    ScanConfig scan_config() const {
        return ScanConfig{full_scan_cap, static_cast<std::uint32_t>(std::min<std::uint64_t>(
                                              sample_count, 1u << 20)),
                          seed, true};
    }
};

void apply_caps(RunConfig& cfg, const std::string& caps) {
    std::size_t pos = 0;
    while (pos < caps.size()) {
        auto comma = caps.find(',', pos);
        if (comma == std::string::npos) comma = caps.size();
        auto eq = caps.find('=', pos);
        if (eq == std::string::npos || eq > comma)
            throw ParseError("bad --caps entry", pos, comma);
        std::string key = caps.substr(pos, eq - pos);
        long long value = std::stoll(caps.substr(eq + 1, comma - eq - 1));
        if (key == "order")
            cfg.order_cap = static_cast<std::uint64_t>(value);
        else if (key == "scan")
            cfg.full_scan_cap = static_cast<std::uint32_t>(value);
        else if (key == "sample")
            cfg.sample_count = static_cast<std::uint64_t>(value);
        else if (key == "denominator")
            cfg.denominator_bound = static_cast<long>(value);
        else if (key == "degree")
            cfg.degree_bound = static_cast<long>(value);
        else
            throw ParseError("unknown --caps key '" + key + "'", pos, eq);
        pos = comma + 1;
    }
}

void emit(const RunConfig& cfg, const nlohmann::json& j, const std::string& out_path) {
    std::string text = cfg.format == "json" ? j.dump(2) : j.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        f << text << "\n";
    }
}

nlohmann::json load_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open matrix file " + path, 0, 0);
    nlohmann::json j;
    f >> j;
    return j;
}

template <class Fn>
int dispatch_domain(const nlohmann::json& file, Fn&& fn) {
    std::string dom = file.value("domain", "Z");
    if (dom == "Z") {
        IntegerDomain d;
        return fn(d);
    }
    PolyDomain d(file.value("p", 2));
    return fn(d);
}

template <class D>
nlohmann::json mat_to_json(const D& d, const Mat<D>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(d.str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_snf(const RunConfig& cfg, const std::string& matrix_file, const std::string& out_path) {
    auto file = load_matrix_file(matrix_file);
    return dispatch_domain(file, [&](auto d) {
        auto B = qmat_from_json(d, file.at("entries"));
        auto snf = smith_normal_form(d, B.ring_part(d));
        if (!mat_eq(d, mat_mul(d, mat_mul(d, snf.P, B.ring_part(d)), snf.Q), snf.D_mat)) {
            std::cerr << "snf verification failed\n";
            return 1;
        }
        nlohmann::json j;
        j["D"] = mat_to_json(d, snf.D_mat);
        j["P"] = mat_to_json(d, snf.P);
        j["Q"] = mat_to_json(d, snf.Q);
        emit(cfg, j, out_path);
        return 0;
    });
}

int run_diag(const RunConfig& cfg, const std::string& matrix_file, const std::string& out_path) {
    auto file = load_matrix_file(matrix_file);
    return dispatch_domain(file, [&](auto d) {
        auto B = qmat_from_json(d, file.at("entries"));
        long bound = file.value("domain", "Z") == "Z" ? cfg.denominator_bound : cfg.degree_bound;
        auto w = matrix_morphic_witness(d, B, bound, cfg.seed);
        nlohmann::json j;
        j["D"] = to_json(d, w.diag.D_mat);
        j["U"] = to_json(d, w.diag.U);
        j["V"] = to_json(d, w.diag.V);
        j["W"] = to_json(d, w.W);
        j["ops"] = ops_to_json(d, w.diag.ops);
        j["report"] = to_json(w.report);
        emit(cfg, j, out_path);
        return w.report.ok() ? 0 : 1;
    });
}

int run_qtriv(const RunConfig& cfg, const std::string& matrix_file, const std::string& out_path) {
    auto file = load_matrix_file(matrix_file);
    return dispatch_domain(file, [&](auto d) {
        auto B = qmat_from_json(d, file.at("entries"));
        if (B.rows < 1 || B.cols < 1) throw ParseError("qtriv needs at least one entry", 0, 0);
        auto e = B.at(0, 0);
        auto w = morphic_partner(d, e);
        long bound = file.value("domain", "Z") == "Z" ? cfg.denominator_bound : cfg.degree_bound;
        auto rep = verify_partner(d, e, w, bound, cfg.seed);
        nlohmann::json j;
        j["element"] = {{"m", fraction_str(d, e.m)}, {"r", d.str(e.r)}};
        j["partner"] = {{"m", fraction_str(d, w.m)}, {"r", d.str(w.r)}};
        j["report"] = to_json(rep);
        emit(cfg, j, out_path);
        return rep.ok() ? 0 : 1;
    });
}

int run_verify(const RunConfig& cfg, const std::string& out_path) {
    nlohmann::json all;
    bool ok = true;
    for (const auto& entry : catalog()) {
        BuiltSpec built = build_catalog_entry(entry, cfg.ring_caps());
        nlohmann::json je;
        if (!entry.spec.empty()) {
            // parse -> render -> parse round trip
            auto ast = parse_spec(entry.spec);
            je["round_trip"] = render_spec(*parse_spec(render_spec(*ast))) == render_spec(*ast);
            if (!je["round_trip"].get<bool>()) ok = false;
        }
        auto rep = ring_properties(built.ring, cfg.scan_config());
        je["report"] = to_json(rep);
        // implication chain: morphic => quasi-morphic => Bezout, per side
        bool chain = (!rep.left_morphic || rep.left_quasi_morphic) &&
                     (!rep.right_morphic || rep.right_quasi_morphic) &&
                     (!rep.left_quasi_morphic || rep.left_bezout) &&
                     (!rep.right_quasi_morphic || rep.right_bezout);
        je["implication_chain"] = chain;
        if (!chain) ok = false;
        if (built.triv) {
            auto rec = reconcile(built.base, built.bimodule, cfg.ring_caps());
            je["reconcile"] = to_json(rec);
            if (!rec.match) ok = false;
        }
        if (rep.is_commutative && built.ring->order <= 64) {
            auto wb = weak_baer_bezout_witness(built.ring);
            je["weak_baer"] = to_json(wb);
        }
        all[entry.name] = std::move(je);
    }
    nlohmann::json j;
    j["entries"] = std::move(all);
    j["ok"] = ok;
    emit(cfg, j, out_path);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring and trivial-extension analysis"};
    std::string command, spec, caps, format = "text", matrix_file, out_path;
    std::uint64_t seed = 0;
    app.add_option("--command", command, "analyze|classify|witness|lattice|qtriv|snf|diag|verify")
        ->required();
    app.add_option("--spec", spec, "ring spec, e.g. TrivExt(Z(4),Reg(Z(4)))");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--caps", caps, "key=value list: order,scan,sample,denominator,degree");
    app.add_option("--format", format, "text|json");
    app.add_option("--matrix-file", matrix_file, "matrix JSON for qtriv/snf/diag");
    app.add_option("--out", out_path, "output file (default stdout)");
    CLI11_PARSE(app, argc, argv);

    RunConfig cfg;
    cfg.seed = seed;
    cfg.format = format;

    try {
        if (!caps.empty()) apply_caps(cfg, caps);
        if (command == "snf") return run_snf(cfg, matrix_file, out_path);
        if (command == "diag") return run_diag(cfg, matrix_file, out_path);
        if (command == "qtriv") return run_qtriv(cfg, matrix_file, out_path);
        if (command == "verify") return run_verify(cfg, out_path);

        if (spec.empty()) {
            std::cerr << "--spec required for command " << command << "\n";
            return 2;
        }
        BuiltSpec built = build_spec(parse_spec(spec), cfg.ring_caps());

        if (command == "analyze") {
            emit(cfg, to_json(ring_properties(built.ring, cfg.scan_config())), out_path);
            return 0;
        }
        if (command == "witness") {
            RingAnalysis A(built.ring);
            nlohmann::json j;
            nlohmann::json elems = nlohmann::json::array();
            for (std::uint32_t a = 0; a < built.ring->order; ++a) {
                nlohmann::json je;
                je["element"] = a;
                auto w = left_morphic_witness(A, a);
                if (w)
                    je["left_partner"] = w->partner;
                else
                    je["left_partner"] = nullptr;
                auto wr = right_morphic_witness(A, a);
                if (wr)
                    je["right_partner"] = wr->partner;
                else
                    je["right_partner"] = nullptr;
                elems.push_back(std::move(je));
            }
            j["witnesses"] = std::move(elems);
            emit(cfg, j, out_path);
            return 0;
        }
        if (command == "classify") {
            if (!built.triv) {
                std::cerr << "classify needs a TrivExt spec\n";
                return 2;
            }
            auto rec = reconcile(built.base, built.bimodule, cfg.ring_caps());
            emit(cfg, to_json(rec), out_path);
            return rec.match ? 0 : 1;
        }
        if (command == "lattice") {
            if (!built.triv) {
                std::cerr << "lattice needs a TrivExt spec\n";
                return 2;
            }
            auto map = build_lattice_map(*built.triv);
            emit(cfg, to_json(map), out_path);
            return 0;
        }
        std::cerr << "unknown command " << command << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
