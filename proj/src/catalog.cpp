#include "ringlab/catalog.hpp"

#include <sstream>

namespace ringlab {

namespace {

// Elements a + b*x + c*y indexed a + 2b + 4c; multiplication kills xx, xy, yy.
std::string f2_xy_table_text() {
    auto mul = [](int u, int v) {
        int a1 = u & 1, b1 = (u >> 1) & 1, c1 = (u >> 2) & 1;
        int a2 = v & 1, b2 = (v >> 1) & 1, c2 = (v >> 2) & 1;
        int a = a1 & a2;
        int b = (a1 & b2) ^ (b1 & a2);
        int c = (a1 & c2) ^ (c1 & a2);
        return a + 2 * b + 4 * c;
    };
    std::ostringstream out;
    out << "ring 8\n";
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) out << (u ^ v) << " ";
        out << "\n";
    }
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) out << mul(u, v) << " ";
        out << "\n";
    }
    return out.str();
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    for (int n : {2, 3, 4, 6, 8, 9, 12, 16})
        c.push_back({"Z(" + std::to_string(n) + ")", "Z(" + std::to_string(n) + ")", ""});
    c.push_back({"GF(2,x)", "GF(2,x)", ""});
    c.push_back({"GF(2,x^2+x+1)", "GF(2,x^2+x+1)", ""});
    c.push_back({"GF(2,x^3+x+1)", "GF(2,x^3+x+1)", ""});
    c.push_back({"GF(3,x)", "GF(3,x)", ""});
    c.push_back({"GF(3,x^2+1)", "GF(3,x^2+1)", ""});
    c.push_back({"Mat(2,Z(2))", "Mat(2,Z(2))", ""});
    c.push_back({"Mat(2,GF(2,x^2+x+1))", "Mat(2,GF(2,x^2+x+1))", ""});
    c.push_back({"Prod(Z(2),Z(2))", "Prod(Z(2),Z(2))", ""});
    c.push_back({"Prod(Z(2),Z(3))", "Prod(Z(2),Z(3))", ""});
    c.push_back({"Prod(Z(4),Z(4))", "Prod(Z(4),Z(4))", ""});
    c.push_back({"Prod(GF(2,x^2+x+1),Z(2))", "Prod(GF(2,x^2+x+1),Z(2))", ""});
    c.push_back({"F2[x,y]/(x,y)^2", "", f2_xy_table_text()});
    // trivial extensions exercised throughout
    c.push_back({"TrivExt(Z(2),Reg(Z(2)))", "TrivExt(Z(2),Reg(Z(2)))", ""});
    c.push_back({"TrivExt(Z(4),Reg(Z(4)))", "TrivExt(Z(4),Reg(Z(4)))", ""});
    c.push_back({"TrivExt(Z(4),Zero(Z(4)))", "TrivExt(Z(4),Zero(Z(4)))", ""});
    c.push_back({"TrivExt(Z(6),Reg(Z(6)))", "TrivExt(Z(6),Reg(Z(6)))", ""});
    c.push_back({"TrivExt(GF(2,x^2+x+1),Reg(GF(2,x^2+x+1)))",
                 "TrivExt(GF(2,x^2+x+1),Reg(GF(2,x^2+x+1)))", ""});
    c.push_back({"TrivExt(GF(2,x^2+x+1),Twist(GF(2,x^2+x+1),frobenius))",
                 "TrivExt(GF(2,x^2+x+1),Twist(GF(2,x^2+x+1),frobenius))", ""});
    c.push_back({"TrivExt(Prod(Z(2),Z(2)),Twist(Prod(Z(2),Z(2)),swap))",
                 "TrivExt(Prod(Z(2),Z(2)),Twist(Prod(Z(2),Z(2)),swap))", ""});
    c.push_back({"TrivExt(Prod(Z(2),Z(2)),Reg(Prod(Z(2),Z(2))))",
                 "TrivExt(Prod(Z(2),Z(2)),Reg(Prod(Z(2),Z(2))))", ""});
    // conj(6): the permutation matrix [[0,1],[1,0]], a non-central unit
    c.push_back({"TrivExt(Mat(2,Z(2)),Twist(Mat(2,Z(2)),conj(6)))",
                 "TrivExt(Mat(2,Z(2)),Twist(Mat(2,Z(2)),conj(6)))", ""});
    c.push_back({"TrivExt(Mat(2,Z(2)),Reg(Mat(2,Z(2))))",
                 "TrivExt(Mat(2,Z(2)),Reg(Mat(2,Z(2))))", ""});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

BuiltSpec build_catalog_entry(const CatalogEntry& entry, const RingCaps& caps) {
    if (!entry.table.empty()) {
        BuiltSpec out;
        out.ring = parse_table_ring(entry.table, caps);
        return out;
    }
    return build_spec(parse_spec(entry.spec), caps);
}

RingPtr f2_xy_square_zero(const RingCaps& caps) {
    return parse_table_ring(f2_xy_table_text(), caps);
}

}  // namespace ringlab
