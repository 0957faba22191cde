#pragma once

#include <json.hpp>

#include "ringlab/matrix.hpp"
#include "ringlab/morphic.hpp"
#include "ringlab/structure.hpp"
#include "ringlab/weak_baer.hpp"

namespace ringlab {

// All reports serialize with alphabetically ordered keys (nlohmann's default
// std::map backing), so identical inputs give byte-identical output.

nlohmann::json to_json(const RingReport& r);
nlohmann::json to_json(const ClassificationVerdict& v);
nlohmann::json to_json(const ReconcileReport& r);
nlohmann::json to_json(const LatticeMap& m);
nlohmann::json to_json(const WeakBaerReport& r);
nlohmann::json to_json(const PartnerReport& r);
nlohmann::json to_json(const MatrixWitnessReport& r);

// --- fractions and matrices ---------------------------------------------------

template <class D>
std::string fraction_str(const D& d, const Fraction<D>& f) {
    return d.str(f.num) + "/" + d.str(f.den);
}

// Parses "p/q" where p, q go through the domain's element parser.
template <class D>
Fraction<D> parse_fraction(const D& d, const std::string& text);

template <class D>
typename D::Elem parse_domain_elem(const D& d, const std::string& text);

template <class D>
nlohmann::json to_json(const D& d, const QMat<D>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j)
            row.push_back({{"m", fraction_str(d, m.at(i, j).m)}, {"r", d.str(m.at(i, j).r)}});
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class D>
QMat<D> qmat_from_json(const D& d, const nlohmann::json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
    QMat<D> m(d, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj) {
            const auto& cell = j.at(i).at(jj);
            m.at(i, jj).r = parse_domain_elem(d, cell.at("r").get<std::string>());
            m.at(i, jj).m = parse_fraction(d, cell.at("m").get<std::string>());
        }
    return m;
}

template <class D>
nlohmann::json ops_to_json(const D& d, const std::vector<ElemOp<QExtElem<D>>>& ops) {
    static const char* names[] = {"row_swap", "col_swap", "row_add",
                                  "col_add",  "row_scale", "col_scale"};
    nlohmann::json out = nlohmann::json::array();
    for (const auto& op : ops)
        out.push_back({{"i", op.i},
                       {"j", op.j},
                       {"kind", names[static_cast<int>(op.kind)]},
                       {"m", fraction_str(d, op.c.m)},
                       {"r", d.str(op.c.r)}});
    return out;
}

}  // namespace ringlab
