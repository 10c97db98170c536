#pragma once

#include "liederiv/derivations.hpp"
#include "liederiv/gma.hpp"

#include <memory>
#include <string>
#include <vector>

namespace liederiv {

struct NamedAlgebra {
    std::string name;
    AlgebraPtr algebra;
};

struct NamedBimodule {
    std::string name;
    std::string left, right;
    std::shared_ptr<const Bimodule> module;
};

struct NamedContext {
    std::string name;
    std::string a, b, m, n;
    MoritaContext context;
};

/// A map on a context's GMA or on a named algebra.
struct NamedMap {
    std::string name;
    std::string target;
    EndoMap map;
};

/// Everything one input file declares, in declaration order.
struct Workspace {
    Field field = Field::rationals();
    std::vector<NamedAlgebra> algebras;
    std::vector<NamedBimodule> bimodules;
    std::vector<NamedContext> contexts;
    std::vector<NamedMap> maps;

    /// Lookups throw InputError naming the missing object.
    const NamedAlgebra& algebra(const std::string& name) const;
    const NamedBimodule& bimodule(const std::string& name) const;
    const NamedContext& context(const std::string& name) const;
    const NamedMap& map(const std::string& name) const;
    bool has_context(const std::string& name) const;
    bool has_algebra(const std::string& name) const;

    /// Registers a context together with its algebras and bimodules under
    /// the given names (existing entries with the same name are reused).
    void add_context(const std::string& name, const MoritaContext& c, const std::string& a,
                     const std::string& b, const std::string& m, const std::string& n);
};

/// Parses and validates a workspace document. Parse problems raise
/// InputError with a JSON path; axiom failures raise ValidationError naming
/// the object and the first broken identity.
Workspace parse_workspace(const std::string& text);
/// Reads a file path, or a bundled example when `source` names one.
Workspace load_workspace(const std::string& source);
/// Canonical JSON text of a workspace; parse_workspace inverts it.
std::string emit_workspace(const Workspace& ws);

} // namespace liederiv
