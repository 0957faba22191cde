#include "ringlab/spec_parser.hpp"

#include <cctype>
#include <sstream>

namespace ringlab {
namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos, pos + 1);
        ++pos;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected identifier", start, start + 1);
        return s.substr(start, pos - start);
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start, start + 1);
        return std::stoll(s.substr(start, pos - start));
    }

    // "x^2+x+1" style, sum of monomials c*x^k | c | x^k | x, over the GF prime
    std::vector<int> poly() {
        std::vector<int> coeffs;
        skip_ws();
        std::size_t start = pos;
        for (;;) {
            long long c = 1;
            bool saw_coeff = false;
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                c = integer();
                saw_coeff = true;
                skip_ws();
                if (pos < s.size() && s[pos] == '*') ++pos;
            }
            long long deg = 0;
            skip_ws();
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                deg = 1;
                skip_ws();
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    deg = integer();
                }
            } else if (!saw_coeff) {
                throw ParseError("expected polynomial term", pos, pos + 1);
            }
            if (coeffs.size() < std::size_t(deg) + 1) coeffs.resize(std::size_t(deg) + 1, 0);
            coeffs[std::size_t(deg)] += static_cast<int>(c);
            skip_ws();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                continue;
            }
            break;
        }
        if (coeffs.empty()) throw ParseError("empty polynomial", start, pos);
        return coeffs;
    }

    AstPtr endo() {
        skip_ws();
        std::size_t start = pos;
        auto node = std::make_shared<SpecNode>();
        node->begin = start;
        if (peek_is('[')) {
            expect('[');
            node->kind = SpecNode::Kind::EndoList;
            if (!peek_is(']')) {
                for (;;) {
                    node->images.push_back(static_cast<std::uint32_t>(integer()));
                    if (peek_is(',')) {
                        expect(',');
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            node->end = pos;
            return node;
        }
        std::string w = ident();
        if (w == "id")
            node->kind = SpecNode::Kind::EndoId;
        else if (w == "frobenius")
            node->kind = SpecNode::Kind::EndoFrobenius;
        else if (w == "swap")
            node->kind = SpecNode::Kind::EndoSwap;
        else if (w == "conj") {
            node->kind = SpecNode::Kind::EndoConj;
            expect('(');
            node->n = integer();
            expect(')');
        } else
            throw ParseError("unknown endomorphism '" + w + "'", start, pos);
        node->end = pos;
        return node;
    }

    AstPtr module() {
        skip_ws();
        std::size_t start = pos;
        std::string w = ident();
        auto node = std::make_shared<SpecNode>();
        node->begin = start;
        expect('(');
        if (w == "Reg") {
            node->kind = SpecNode::Kind::Reg;
            node->children.push_back(ring());
        } else if (w == "Zero") {
            node->kind = SpecNode::Kind::Zero;
            node->children.push_back(ring());
        } else if (w == "Twist") {
            node->kind = SpecNode::Kind::Twist;
            node->children.push_back(ring());
            expect(',');
            node->children.push_back(endo());
        } else
            throw ParseError("unknown module constructor '" + w + "'", start, pos);
        expect(')');
        node->end = pos;
        return node;
    }

    AstPtr ring() {
        skip_ws();
        std::size_t start = pos;
        std::string w = ident();
        auto node = std::make_shared<SpecNode>();
        node->begin = start;
        expect('(');
        if (w == "Z") {
            node->kind = SpecNode::Kind::Z;
            node->n = integer();
        } else if (w == "GF") {
            node->kind = SpecNode::Kind::GF;
            node->n = integer();
            expect(',');
            node->poly = poly();
        } else if (w == "Mat") {
            node->kind = SpecNode::Kind::Mat;
            node->n = integer();
            expect(',');
            node->children.push_back(ring());
        } else if (w == "Prod") {
            node->kind = SpecNode::Kind::Prod;
            node->children.push_back(ring());
            expect(',');
            node->children.push_back(ring());
        } else if (w == "TrivExt") {
            node->kind = SpecNode::Kind::TrivExt;
            node->children.push_back(ring());
            expect(',');
            node->children.push_back(module());
        } else
            throw ParseError("unknown ring constructor '" + w + "'", start, pos);
        expect(')');
        node->end = pos;
        return node;
    }
};

std::string render_poly(const std::vector<int>& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingMorphism build_endo(const SpecNode& e, const RingPtr& R) {
    switch (e.kind) {
        case SpecNode::Kind::EndoId:
            return identity_endomorphism(R);
        case SpecNode::Kind::EndoFrobenius:
            return frobenius_endomorphism(R);
        case SpecNode::Kind::EndoSwap:
            return swap_endomorphism(R);
        case SpecNode::Kind::EndoConj:
            if (e.n < 0 || std::uint64_t(e.n) >= R->order)
                throw ParseError("conj element out of range", e.begin, e.end);
            return conjugation_endomorphism(R, static_cast<std::uint32_t>(e.n));
        case SpecNode::Kind::EndoList:
            if (e.images.size() != R->order)
                throw ParseError("endomorphism image list has wrong length", e.begin, e.end);
            return check_morphism(R, R, e.images);
        default:
            throw ParseError("not an endomorphism node", e.begin, e.end);
    }
}

}  // namespace

AstPtr parse_spec(const std::string& text) {
    Parser p{text};
    AstPtr root = p.ring();
    p.skip_ws();
    if (p.pos != text.size())
        throw ParseError("trailing input", p.pos, text.size());
    return root;
}

std::string render_spec(const SpecNode& ast) {
    using K = SpecNode::Kind;
    switch (ast.kind) {
        case K::Z:
            return "Z(" + std::to_string(ast.n) + ")";
        case K::GF:
            return "GF(" + std::to_string(ast.n) + "," + render_poly(ast.poly) + ")";
        case K::Mat:
            return "Mat(" + std::to_string(ast.n) + "," + render_spec(*ast.children[0]) + ")";
        case K::Prod:
            return "Prod(" + render_spec(*ast.children[0]) + "," + render_spec(*ast.children[1]) +
                   ")";
        case K::TrivExt:
            return "TrivExt(" + render_spec(*ast.children[0]) + "," +
                   render_spec(*ast.children[1]) + ")";
        case K::Reg:
            return "Reg(" + render_spec(*ast.children[0]) + ")";
        case K::Zero:
            return "Zero(" + render_spec(*ast.children[0]) + ")";
        case K::Twist:
            return "Twist(" + render_spec(*ast.children[0]) + "," +
                   render_spec(*ast.children[1]) + ")";
        case K::EndoId:
            return "id";
        case K::EndoFrobenius:
            return "frobenius";
        case K::EndoSwap:
            return "swap";
        case K::EndoConj:
            return "conj(" + std::to_string(ast.n) + ")";
        case K::EndoList: {
            std::string out = "[";
            for (std::size_t i = 0; i < ast.images.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(ast.images[i]);
            }
            return out + "]";
        }
    }
    return "";
}

BuiltSpec build_spec(const AstPtr& ast, const RingCaps& caps) {
    using K = SpecNode::Kind;
    BuiltSpec out;
    switch (ast->kind) {
        case K::Z:
            out.ring = std::make_shared<const FiniteRing>(
                build_cyclic(static_cast<std::uint64_t>(ast->n), caps));
            return out;
        case K::GF:
            if (!is_prime(ast->n))
                throw ParseError("GF characteristic must be prime", ast->begin, ast->end);
            out.ring = std::make_shared<const FiniteRing>(
                build_galois(static_cast<int>(ast->n), ast->poly, caps));
            return out;
        case K::Mat: {
            auto base = build_spec(ast->children[0], caps);
            out.ring = std::make_shared<const FiniteRing>(
                build_matrix_ring(static_cast<int>(ast->n), *base.ring, caps));
            return out;
        }
        case K::Prod: {
            auto l = build_spec(ast->children[0], caps);
            auto r = build_spec(ast->children[1], caps);
            out.ring =
                std::make_shared<const FiniteRing>(build_product(*l.ring, *r.ring, caps));
            return out;
        }
        case K::TrivExt: {
            auto base = build_spec(ast->children[0], caps);
            out.base = base.ring;
            const SpecNode& mod = *ast->children[1];
            RingPtr mod_ring = build_spec(mod.children[0], caps).ring;
            if (mod_ring->order != out.base->order)
                throw ParseError("module base ring must match the extension base", mod.begin,
                                 mod.end);
            FiniteBimodule M;
            switch (mod.kind) {
                case K::Reg:
                    M = regular_bimodule(out.base);
                    break;
                case K::Zero:
                    M = zero_bimodule(out.base);
                    break;
                case K::Twist:
                    M = twisted_bimodule(out.base, build_endo(*mod.children[1], out.base));
                    break;
                default:
                    throw ParseError("not a module node", mod.begin, mod.end);
            }
            out.bimodule = std::make_shared<const FiniteBimodule>(std::move(M));
            out.triv = std::make_shared<const TrivialExtensionRing>(
                build_trivial_extension(out.base, out.bimodule, caps));
            out.ring = out.triv->as_ring;
            return out;
        }
        default:
            throw ParseError("not a ring node", ast->begin, ast->end);
    }
}

RingPtr parse_table_ring(const std::string& text, const RingCaps& caps) {
    std::istringstream in(text);
    std::string header;
    if (!(in >> header) || header != "ring")
        throw ParseError("table import must start with 'ring <order>'", 0, 0);
    std::uint32_t order = 0;
    if (!(in >> order) || order == 0) throw ParseError("bad order in table import", 0, 0);
    auto read_table = [&](const char* what) {
        std::vector<std::uint32_t> t(std::size_t(order) * order);
        for (auto& v : t)
            if (!(in >> v) || v >= order)
                throw ParseError(std::string("bad ") + what + " table entry", 0, 0);
        return t;
    };
    auto add = read_table("add");
    auto mul = read_table("mul");
    return std::make_shared<const FiniteRing>(
        ring_from_tables(order, std::move(add), std::move(mul), caps));
}

}  // namespace ringlab
