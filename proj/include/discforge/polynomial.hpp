#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "discforge/monomial.hpp"
#include "discforge/order.hpp"
#include "discforge/rational.hpp"
#include "discforge/ring.hpp"

namespace discforge {

struct Term {
    Monomial mon;
    Rat coef;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted strictly
// descending under the ring default order (grevlex), with no zero
// coefficients and no duplicate monomials; the zero polynomial is the empty
// term list.  Values are immutable after construction and freely shared.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Rat c);
    static Polynomial variable(RingPtr ring, std::size_t var);
    static Polynomial monomial(RingPtr ring, Monomial m, Rat c = 1);
    // Normalizes: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mon.is_one(); }
    std::size_t term_count() const { return terms_.size(); }

    // Leading data under the ring default order.
    const Term& leading_term() const { return terms_.front(); }
    // Leading data under an arbitrary order (linear scan).
    const Term& leading_term(const MonomialOrder& order) const;

    std::int64_t total_degree() const;  // -1 for the zero polynomial
    std::int64_t degree_in(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(std::uint32_t k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(std::size_t var) const;

    // Simultaneous substitution; values must live in `target` (defaults to
    // this ring).  Unbound variables are carried over by name.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings,
                          RingPtr target = nullptr) const;
    Polynomial substitute(const std::map<std::string, Rat>& bindings) const;

    // Variable-renaming embed into a ring containing all used variables.
    Polynomial map_into(const RingPtr& target) const;

    // Monic normalization (divide by leading coefficient, default order).
    Polynomial monic() const;
    // Integer-primitive normalization with positive leading coefficient.
    Polynomial primitive() const;
    // Rational content: terms() of primitive() times content() rebuild *this.
    Rat content() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// Deterministic total order on canonical polynomials (by leading monomials,
// then coefficients); used to sort basis outputs.
int compare_canonical(const Polynomial& a, const Polynomial& b);

Polynomial derivative(const Polynomial& p, const std::string& var);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace discforge
