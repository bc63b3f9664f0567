#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "discforge/errors.hpp"

namespace discforge {

enum class VarRole {
    torus_x,        // integration / torus variables
    homogenizer_y,  // the reciprocal 1 = y*f variable
    parameter_z,    // affine parameters of the family
    cotangent_zeta, // fiber coordinates of T*Z
    aux             // saturation / extension helpers
};

// Immutable list of named, role-tagged variables.  Shared by handle; two
// polynomials are compatible iff they hold the same ring object.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, std::vector<VarRole> roles);

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    VarRole role(std::size_t i) const { return roles_[i]; }

    bool has_var(const std::string& name) const { return index_.count(name) != 0; }
    // Throws unknown_variable_error when absent.
    std::size_t index_of(const std::string& name) const;

    std::vector<std::size_t> indices_with_role(VarRole role) const;

private:
    std::vector<std::string> names_;
    std::vector<VarRole> roles_;
    std::map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names,
                  std::vector<VarRole> roles = {});

// Ring with `names` removed; used by elimination.
RingPtr subring_without(const RingPtr& ring, const std::vector<std::string>& drop);

// Ring with extra trailing variables (role aux unless specified).
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra,
                    VarRole role = VarRole::aux);

}  // namespace discforge
