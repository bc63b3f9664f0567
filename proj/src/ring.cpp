#include "discforge/ring.hpp"

#include <algorithm>

namespace discforge {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<VarRole> roles)
    : names_(std::move(names)), roles_(std::move(roles)) {
    if (roles_.empty()) roles_.assign(names_.size(), VarRole::aux);
    if (roles_.size() != names_.size())
        throw std::invalid_argument("ring: names/roles length mismatch");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        (void)it;
        if (!fresh) throw std::invalid_argument("ring: duplicate variable " + names_[i]);
    }
}

std::size_t PolyRing::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw unknown_variable_error(name);
    return it->second;
}

std::vector<std::size_t> PolyRing::indices_with_role(VarRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] == role) out.push_back(i);
    return out;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<VarRole> roles) {
    return std::make_shared<const PolyRing>(std::move(names), std::move(roles));
}

RingPtr subring_without(const RingPtr& ring, const std::vector<std::string>& drop) {
    std::vector<std::string> names;
    std::vector<VarRole> roles;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
        if (std::find(drop.begin(), drop.end(), ring->name(i)) == drop.end()) {
            names.push_back(ring->name(i));
            roles.push_back(ring->role(i));
        }
    }
    return make_ring(std::move(names), std::move(roles));
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra, VarRole role) {
    std::vector<std::string> names = ring->names();
    std::vector<VarRole> roles;
    for (std::size_t i = 0; i < ring->arity(); ++i) roles.push_back(ring->role(i));
    for (const auto& n : extra) {
        names.push_back(n);
        roles.push_back(role);
    }
    return make_ring(std::move(names), std::move(roles));
}

}  // namespace discforge
