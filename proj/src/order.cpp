#include "discforge/order.hpp"

#include <sstream>

#include "discforge/errors.hpp"

namespace discforge {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
    std::int64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

// Same comparisons restricted to an index subset.
int cmp_lex_on(const std::vector<std::size_t>& idx, const Monomial& a, const Monomial& b) {
    for (std::size_t i : idx) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex_on(const std::vector<std::size_t>& idx, const Monomial& a, const Monomial& b) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i : idx) {
        da += a.exp(i);
        db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = idx.size(); k-- > 0;) {
        std::size_t i = idx[k];
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

}  // namespace

MonomialOrder MonomialOrder::lex() {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    return o;
}

MonomialOrder MonomialOrder::grevlex() {
    MonomialOrder o;
    o.kind_ = Kind::grevlex;
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> first_block, std::size_t arity,
                                   Kind inner_first, Kind inner_rest) {
    MonomialOrder o;
    o.kind_ = Kind::block;
    o.block_ = std::move(first_block);
    o.inner_first_ = inner_first;
    o.inner_rest_ = inner_rest;
    std::vector<bool> in_block(arity, false);
    for (std::size_t i : o.block_) in_block[i] = true;
    for (std::size_t i = 0; i < arity; ++i)
        if (!in_block[i]) o.rest_.push_back(i);
    return o;
}

MonomialOrder MonomialOrder::weighted(std::vector<std::int64_t> w, MonomialOrder tie) {
    MonomialOrder o;
    o.kind_ = Kind::weighted;
    o.weights_ = std::move(w);
    o.tie_ = std::make_shared<const MonomialOrder>(std::move(tie));
    return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw ring_mismatch_error("monomial arity mismatch");
    switch (kind_) {
        case Kind::lex:
            return cmp_lex(a, b);
        case Kind::grevlex:
            return cmp_grevlex(a, b);
        case Kind::block: {
            int c = inner_first_ == Kind::lex ? cmp_lex_on(block_, a, b)
                                              : cmp_grevlex_on(block_, a, b);
            if (c != 0) return c;
            return inner_rest_ == Kind::lex ? cmp_lex_on(rest_, a, b)
                                            : cmp_grevlex_on(rest_, a, b);
        }
        case Kind::weighted: {
            if (weights_.size() != a.arity())
                throw ring_mismatch_error("weight vector arity mismatch");
            std::int64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < a.arity(); ++i) {
                wa += weights_[i] * a.exp(i);
                wb += weights_[i] * b.exp(i);
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return tie_->compare(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::lex:
            os << "lex";
            break;
        case Kind::grevlex:
            os << "grevlex";
            break;
        case Kind::block:
            os << "block[";
            for (std::size_t k = 0; k < block_.size(); ++k) {
                if (k) os << ',';
                os << block_[k];
            }
            os << (inner_first_ == Kind::lex ? ";lex" : ";grevlex");
            os << (inner_rest_ == Kind::lex ? ";lex]" : ";grevlex]");
            break;
        case Kind::weighted:
            os << "w[";
            for (std::size_t k = 0; k < weights_.size(); ++k) {
                if (k) os << ',';
                os << weights_[k];
            }
            os << ";" << tie_->key() << "]";
            break;
    }
    return os.str();
}

}  // namespace discforge
