#pragma once

#include "ringlab/trivial_extension.hpp"

namespace ringlab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t begin, std::size_t end)
        : std::runtime_error(msg + " at " + std::to_string(begin) + ".." + std::to_string(end)),
          begin_(begin),
          end_(end) {}
    std::size_t begin() const { return begin_; }
    std::size_t end() const { return end_; }

private:
    std::size_t begin_, end_;
};

struct SpecNode;
using AstPtr = std::shared_ptr<const SpecNode>;

struct SpecNode {
    enum class Kind {
        Z,        // n
        GF,       // n = p, poly = modulus
        Mat,      // n = k, child ring
        Prod,     // two child rings
        TrivExt,  // child ring, child module
        Reg,      // child ring
        Twist,    // child ring, child endo
        Zero,     // child ring
        EndoId,
        EndoFrobenius,
        EndoSwap,
        EndoConj,  // n = unit index
        EndoList,  // images
    };
    Kind kind = Kind::Z;
    long long n = 0;
    std::vector<int> poly;           // low degree first
    std::vector<std::uint32_t> images;
    std::vector<AstPtr> children;
    std::size_t begin = 0, end = 0;  // source span
};

AstPtr parse_spec(const std::string& text);
std::string render_spec(const SpecNode& ast);

// A ring-valued spec materialized; base/bimodule/triv set when the root is a
// trivial extension.
struct BuiltSpec {
    RingPtr ring;
    RingPtr base;
    ModPtr bimodule;
    std::shared_ptr<const TrivialExtensionRing> triv;
};

BuiltSpec build_spec(const AstPtr& ast, const RingCaps& caps = {});

// Explicit-table format: "ring <order>" then the add and mul tables as
// whitespace-separated indices, row-major.
RingPtr parse_table_ring(const std::string& text, const RingCaps& caps = {});

}  // namespace ringlab
