#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "discforge/monomial.hpp"

namespace discforge {

// Total, multiplicative well-orders on monomials.  grevlex is the ring
// default; block orders drive elimination and weighted orders drive
// initial-ideal extraction.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, block, weighted };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    // Two-block order on a ring of `arity` variables: the ones listed in
    // `first_block` dominate, each block compared by `inner_first` /
    // `inner_rest` (lex or grevlex).
    static MonomialOrder block(std::vector<std::size_t> first_block, std::size_t arity,
                               Kind inner_first = Kind::grevlex,
                               Kind inner_rest = Kind::grevlex);
    // Compare <w,a> against <w,b> first, break ties with `tie`.
    static MonomialOrder weighted(std::vector<std::int64_t> w, MonomialOrder tie);

    Kind kind() const { return kind_; }

    // -1 when a < b, 0 when equal, +1 when a > b.  Throws on arity mismatch.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // Canonical description, used as Groebner cache key.
    std::string key() const;

    bool operator==(const MonomialOrder& o) const { return key() == o.key(); }

private:
    MonomialOrder() = default;

    Kind kind_ = Kind::grevlex;
    std::vector<std::size_t> block_;   // block: indices of the leading block
    std::vector<std::size_t> rest_;    // block: the remaining indices
    Kind inner_first_ = Kind::grevlex; // block: order within leading block
    Kind inner_rest_ = Kind::grevlex;  // block: order within the remainder
    std::vector<std::int64_t> weights_;
    std::shared_ptr<const MonomialOrder> tie_;
};

}  // namespace discforge
