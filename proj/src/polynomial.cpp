#include "discforge/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace discforge {

namespace {

const MonomialOrder& default_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring()) throw ring_mismatch_error("polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::zero(RingPtr ring) {
    Polynomial p;
    p.ring_ = std::move(ring);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, Rat c) {
    Polynomial p;
    p.ring_ = std::move(ring);
    if (c != 0) p.terms_.push_back({Monomial(p.ring_->arity()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
    Monomial m(ring->arity());
    m.exp(var) = 1;
    return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Rat c) {
    Polynomial p;
    p.ring_ = std::move(ring);
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p;
    p.ring_ = std::move(ring);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return default_order().compare(a.mon, b.mon) > 0;
    });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
            p.terms_.back().coef += t.coef;
            if (p.terms_.back().coef == 0) p.terms_.pop_back();
        } else if (t.coef != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.compare(t.mon, best->mon) > 0) best = &t;
    return *best;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

std::int64_t Polynomial::degree_in(std::size_t var) const {
    std::int64_t d = is_zero() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<std::int64_t>(d, t.mon.exp(var));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

// Merge of two descending term lists.
Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& ord = default_order();
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mon, o.terms_[j].mon);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].coef + o.terms_[j].coef;
            if (s != 0) r.terms_.push_back({terms_[i].mon, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    Polynomial r;
    r.ring_ = ring_;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mon, m), t.coef * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    // Accumulate into an ordered map; fine at the sizes we deal with.
    std::map<Monomial, Rat, bool (*)(const Monomial&, const Monomial&)> acc(
        [](const Monomial& a, const Monomial& b) { return default_order().compare(a, b) > 0; });
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m = mono_mul(s.mon, t.mon);
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), s.coef * t.coef);
            } else {
                it->second += s.coef * t.coef;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    Polynomial r;
    r.ring_ = ring_;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r;
    r.ring_ = ring_;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon, t.coef * c});
    return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mon != o.terms_[i].mon || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        std::int32_t e = t.mon.exp(var);
        if (e == 0) continue;
        Monomial m = t.mon;
        m.exp(var) = e - 1;
        out.push_back({std::move(m), t.coef * e});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings,
                                  RingPtr target) const {
    if (!target) target = ring_;
    for (const auto& [name, value] : bindings) {
        ring_->index_of(name);  // throws on unknown variable
        if (value.ring() != target) throw ring_mismatch_error("substitute: value not in target ring");
    }
    // Precompute powers of each substituted value up to its needed degree.
    std::map<std::size_t, std::vector<Polynomial>> powers;
    for (const auto& [name, value] : bindings) {
        std::size_t idx = ring_->index_of(name);
        std::int64_t maxdeg = degree_in(idx);
        std::vector<Polynomial> pw;
        pw.push_back(Polynomial::constant(target, 1));
        for (std::int64_t k = 1; k <= maxdeg; ++k) pw.push_back(pw.back() * value);
        powers.emplace(idx, std::move(pw));
    }
    Polynomial acc = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial part = Polynomial::constant(target, t.coef);
        Monomial rest(target->arity());
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            std::int32_t e = t.mon.exp(i);
            if (e == 0) continue;
            auto it = powers.find(i);
            if (it != powers.end()) {
                part = part * it->second[static_cast<std::size_t>(e)];
            } else {
                std::size_t j = target->index_of(ring_->name(i));
                rest.exp(j) += e;
            }
        }
        acc = acc + part.mul_term(rest, 1);
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rat>& bindings) const {
    std::map<std::string, Polynomial> b;
    for (const auto& [name, value] : bindings)
        b.emplace(name, Polynomial::constant(ring_, value));
    return substitute(b, ring_);
}

Polynomial Polynomial::map_into(const RingPtr& target) const {
    if (target == ring_) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->arity());
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            std::int32_t e = t.mon.exp(i);
            if (e == 0) continue;
            m.exp(target->index_of(ring_->name(i))) = e;
        }
        out.push_back({std::move(m), t.coef});
    }
    return from_terms(target, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / terms_.front().coef);
}

Rat Polynomial::content() const {
    if (is_zero()) return Rat(0);
    // gcd of numerators over lcm of denominators, signed by the lead.
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (terms_.front().coef < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / content());
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.coef < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat mag = neg ? Rat(-t.coef) : t.coef;
        bool triv_mon = t.mon.is_one();
        if (mag != 1 || triv_mon) {
            os << mag.get_str();
            if (!triv_mon) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            std::int32_t e = t.mon.exp(i);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << ring_->name(i);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

int compare_canonical(const Polynomial& a, const Polynomial& b) {
    const MonomialOrder ord = MonomialOrder::grevlex();
    std::size_t n = std::min(a.term_count(), b.term_count());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare(a.terms()[i].mon, b.terms()[i].mon);
        if (c != 0) return c;
        if (a.terms()[i].coef != b.terms()[i].coef)
            return a.terms()[i].coef < b.terms()[i].coef ? -1 : 1;
    }
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count() ? -1 : 1;
    return 0;
}

Polynomial derivative(const Polynomial& p, const std::string& var) {
    return p.derivative(p.ring()->index_of(var));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace discforge
