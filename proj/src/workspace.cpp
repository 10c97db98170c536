#include "liederiv/workspace.hpp"

#include "liederiv/errors.hpp"
#include "liederiv/library.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace liederiv {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

template <class T>
const T& find_named(const std::vector<T>& items, const std::string& name, const char* kind) {
    for (const auto& it : items)
        if (it.name == name)
            return it;
    throw InputError(std::string("unknown ") + kind + " '" + name + "'");
}

template <class T>
bool has_named(const std::vector<T>& items, const std::string& name) {
    for (const auto& it : items)
        if (it.name == name)
            return true;
    return false;
}

// ---- parsing ---------------------------------------------------------------

class Reader {
public:
    explicit Reader(const Field& f) : field_(f) {}

    const json& member(const json& obj, const std::string& key, const std::string& path) const {
        if (!obj.is_object())
            throw InputError(path + ": expected an object");
        auto it = obj.find(key);
        if (it == obj.end())
            throw InputError(path + ": missing field '" + key + "'");
        return *it;
    }

    std::string string(const json& obj, const std::string& key, const std::string& path) const {
        const json& v = member(obj, key, path);
        if (!v.is_string())
            throw InputError(path + "." + key + ": expected a string");
        return v.get<std::string>();
    }

    std::size_t count(const json& obj, const std::string& key, const std::string& path) const {
        const json& v = member(obj, key, path);
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
            throw InputError(path + "." + key + ": expected a non-negative integer");
        return v.get<std::size_t>();
    }

    Scalar scalar(const json& v, const std::string& path) const {
        try {
            if (v.is_number_integer())
                return field_.reduce(Scalar(std::to_string(v.get<long long>())));
            if (v.is_string())
                return field_.parse_scalar(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        } catch (const std::exception& e) {
            throw InputError(path + ": bad scalar (" + e.what() + ")");
        }
        throw InputError(path + ": expected an integer or a \"p/q\" string");
    }

    Vec vector(const json& v, std::size_t n, const std::string& path) const {
        if (!v.is_array() || v.size() != n)
            throw InputError(path + ": expected an array of " + std::to_string(n) + " scalars");
        Vec out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(scalar(v[i], path + "[" + std::to_string(i) + "]"));
        return out;
    }

    Matrix matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& path) const {
        if (!v.is_array() || v.size() != rows)
            throw InputError(path + ": expected " + std::to_string(rows) + " rows");
        Matrix m(field_, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            Vec row = vector(v[r], cols, path + "[" + std::to_string(r) + "]");
            m.set_row(r, row);
        }
        return m;
    }

    Vec tensor(const json& v, std::size_t n0, std::size_t n1, std::size_t n2,
               const std::string& path) const {
        if (!v.is_array() || v.size() != n0)
            throw InputError(path + ": expected " + std::to_string(n0) + " entries on axis 0");
        Vec flat;
        flat.reserve(n0 * n1 * n2);
        for (std::size_t i = 0; i < n0; ++i) {
            const json& vi = v[i];
            std::string pi = path + "[" + std::to_string(i) + "]";
            if (!vi.is_array() || vi.size() != n1)
                throw InputError(pi + ": expected " + std::to_string(n1) + " entries on axis 1");
            for (std::size_t j = 0; j < n1; ++j) {
                Vec x = vector(vi[j], n2, pi + "[" + std::to_string(j) + "]");
                flat.insert(flat.end(), x.begin(), x.end());
            }
        }
        return flat;
    }

private:
    Field field_;
};

const json& array_or_empty(const json& doc, const std::string& key) {
    static const json empty = json::array();
    auto it = doc.find(key);
    if (it == doc.end())
        return empty;
    if (!it->is_array())
        throw InputError(key + ": expected an array");
    return *it;
}

std::string join_failures(const std::vector<std::string>& failures) {
    return failures.empty() ? std::string("unknown failure") : failures.front();
}

// ---- emission --------------------------------------------------------------

ordered_json scalar_json(const Scalar& s) {
    if (s.get_den() == 1 && s.get_num().fits_slong_p())
        return s.get_num().get_si();
    return to_string(s);
}

ordered_json vector_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& s : v)
        a.push_back(scalar_json(s));
    return a;
}

ordered_json tensor_json(const Vec& flat, std::size_t n0, std::size_t n1, std::size_t n2) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < n0; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < n1; ++j) {
            auto first = flat.begin() + static_cast<std::ptrdiff_t>((i * n1 + j) * n2);
            row.push_back(vector_json(Vec(first, first + static_cast<std::ptrdiff_t>(n2))));
        }
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json tensor_json(const Tensor3& t) {
    return tensor_json(t.data(), t.extent(0), t.extent(1), t.extent(2));
}

} // namespace

const NamedAlgebra& Workspace::algebra(const std::string& name) const {
    return find_named(algebras, name, "algebra");
}
const NamedBimodule& Workspace::bimodule(const std::string& name) const {
    return find_named(bimodules, name, "bimodule");
}
const NamedContext& Workspace::context(const std::string& name) const {
    return find_named(contexts, name, "context");
}
const NamedMap& Workspace::map(const std::string& name) const {
    return find_named(maps, name, "map");
}
bool Workspace::has_context(const std::string& name) const { return has_named(contexts, name); }
bool Workspace::has_algebra(const std::string& name) const { return has_named(algebras, name); }

void Workspace::add_context(const std::string& name, const MoritaContext& c, const std::string& a,
                            const std::string& b, const std::string& m, const std::string& n) {
    auto add_algebra = [&](const std::string& nm, const AlgebraPtr& p) {
        if (has_algebra(nm)) {
            if (algebra(nm).algebra != p)
                throw InputError("algebra name '" + nm + "' is already used by another algebra");
            return;
        }
        algebras.push_back(NamedAlgebra{nm, p});
    };
    add_algebra(a, c.A);
    add_algebra(b, c.B);
    if (!has_named(bimodules, m))
        bimodules.push_back(NamedBimodule{m, a, b, std::make_shared<const Bimodule>(c.M)});
    if (!has_named(bimodules, n))
        bimodules.push_back(NamedBimodule{n, b, a, std::make_shared<const Bimodule>(c.N)});
    if (has_context(name))
        throw InputError("duplicate context '" + name + "'");
    contexts.push_back(NamedContext{name, a, b, m, n, c});
}

Workspace parse_workspace(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n')
                ++line;
        throw InputError("JSON parse error at line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object())
        throw InputError("workspace: expected a JSON object");

    Workspace ws;
    {
        auto it = doc.find("field");
        if (it == doc.end() || !it->is_string())
            throw InputError("field: expected a string such as \"Q\" or \"GF(5)\"");
        ws.field = Field::parse(it->get<std::string>());
    }
    Reader rd(ws.field);

    const json& algebras = array_or_empty(doc, "algebras");
    for (std::size_t idx = 0; idx < algebras.size(); ++idx) {
        const json& a = algebras[idx];
        std::string path = "algebras[" + std::to_string(idx) + "]";
        std::string name = rd.string(a, "name", path);
        if (ws.has_algebra(name))
            throw InputError(path + ": duplicate algebra name '" + name + "'");
        std::size_t d = rd.count(a, "dim", path);
        if (d == 0)
            throw InputError(path + ".dim: must be positive");
        std::vector<std::string> basis;
        if (a.contains("basis")) {
            const json& b = a["basis"];
            if (!b.is_array() || b.size() != d)
                throw InputError(path + ".basis: expected " + std::to_string(d) + " names");
            for (const auto& s : b) {
                if (!s.is_string())
                    throw InputError(path + ".basis: names must be strings");
                basis.push_back(s.get<std::string>());
            }
        }
        Vec structure = rd.tensor(rd.member(a, "structure", path), d, d, d, path + ".structure");
        Vec unit = rd.vector(rd.member(a, "unit", path), d, path + ".unit");
        std::shared_ptr<FDAlgebra> alg;
        try {
            alg = std::make_shared<FDAlgebra>(ws.field, d, structure, unit, basis);
        } catch (const ValidationError& e) {
            throw ValidationError("algebra '" + name + "': " + join_failures(e.failures()),
                                  e.failures());
        }
        if (a.contains("idempotents")) {
            const json& ids = a["idempotents"];
            if (!ids.is_array())
                throw InputError(path + ".idempotents: expected an array");
            for (std::size_t i = 0; i < ids.size(); ++i) {
                std::string ip = path + ".idempotents[" + std::to_string(i) + "]";
                try {
                    alg->declare_idempotent(rd.vector(ids[i], d, ip));
                } catch (const ValidationError& e) {
                    throw ValidationError(ip + ": " + e.what(), e.failures());
                }
            }
        }
        ws.algebras.push_back(NamedAlgebra{name, alg});
    }

    const json& bimodules = array_or_empty(doc, "bimodules");
    for (std::size_t idx = 0; idx < bimodules.size(); ++idx) {
        const json& b = bimodules[idx];
        std::string path = "bimodules[" + std::to_string(idx) + "]";
        std::string name = rd.string(b, "name", path);
        if (has_named(ws.bimodules, name))
            throw InputError(path + ": duplicate bimodule name '" + name + "'");
        std::string left = rd.string(b, "left", path), right = rd.string(b, "right", path);
        AlgebraPtr la = ws.algebra(left).algebra, ra = ws.algebra(right).algebra;
        std::size_t d = rd.count(b, "dim", path);
        Vec lt = rd.tensor(rd.member(b, "left_action", path), la->dim(), d, d, path + ".left_action");
        Vec rt =
            rd.tensor(rd.member(b, "right_action", path), d, ra->dim(), d, path + ".right_action");
        auto mod = std::make_shared<const Bimodule>(la, ra, d,
                                                    Tensor3(ws.field, la->dim(), d, d, lt),
                                                    Tensor3(ws.field, d, ra->dim(), d, rt));
        ValidationReport rep = validate_bimodule(*mod);
        if (!rep.ok())
            throw ValidationError("bimodule '" + name + "': " + rep.failures.front(), rep.failures);
        ws.bimodules.push_back(NamedBimodule{name, left, right, mod});
    }

    const json& contexts = array_or_empty(doc, "contexts");
    for (std::size_t idx = 0; idx < contexts.size(); ++idx) {
        const json& c = contexts[idx];
        std::string path = "contexts[" + std::to_string(idx) + "]";
        std::string name = rd.string(c, "name", path);
        if (ws.has_context(name))
            throw InputError(path + ": duplicate context name '" + name + "'");
        std::string an = rd.string(c, "A", path), bn = rd.string(c, "B", path);
        std::string mn = rd.string(c, "M", path), nn = rd.string(c, "N", path);
        AlgebraPtr A = ws.algebra(an).algebra, B = ws.algebra(bn).algebra;
        const NamedBimodule& M = ws.bimodule(mn);
        const NamedBimodule& N = ws.bimodule(nn);
        if (M.left != an || M.right != bn)
            throw InputError(path + ": M must be an (" + an + ", " + bn + ")-bimodule");
        if (N.left != bn || N.right != an)
            throw InputError(path + ": N must be a (" + bn + ", " + an + ")-bimodule");
        const std::size_t dm = M.module->dim(), dn = N.module->dim();
        Tensor3 phi(ws.field, dm, dn, A->dim()), psi(ws.field, dn, dm, B->dim());
        if (c.contains("phi"))
            phi = Tensor3(ws.field, dm, dn, A->dim(),
                          rd.tensor(c["phi"], dm, dn, A->dim(), path + ".phi"));
        if (c.contains("psi"))
            psi = Tensor3(ws.field, dn, dm, B->dim(),
                          rd.tensor(c["psi"], dn, dm, B->dim(), path + ".psi"));
        MoritaContext ctx{A, B, *M.module, *N.module, phi, psi};
        ValidationReport rep = validate_context(ctx);
        if (!rep.ok())
            throw ValidationError("context '" + name + "': " + rep.failures.front(), rep.failures);
        ws.contexts.push_back(NamedContext{name, an, bn, mn, nn, std::move(ctx)});
    }

    const json& maps = array_or_empty(doc, "maps");
    for (std::size_t idx = 0; idx < maps.size(); ++idx) {
        const json& m = maps[idx];
        std::string path = "maps[" + std::to_string(idx) + "]";
        std::string name = rd.string(m, "name", path);
        if (has_named(ws.maps, name))
            throw InputError(path + ": duplicate map name '" + name + "'");
        std::string target = rd.string(m, "target", path);
        std::size_t d;
        if (ws.has_context(target)) {
            const MoritaContext& c = ws.context(target).context;
            d = c.A->dim() + c.M.dim() + c.N.dim() + c.B->dim();
        } else if (ws.has_algebra(target)) {
            d = ws.algebra(target).algebra->dim();
        } else {
            throw InputError(path + ".target: no context or algebra named '" + target + "'");
        }
        ws.maps.push_back(
            NamedMap{name, target, EndoMap{rd.matrix(rd.member(m, "matrix", path), d, d, path + ".matrix")}});
    }
    return ws;
}

Workspace load_workspace(const std::string& source) {
    for (const auto& name : example_names())
        if (name == source)
            return load_example(name);
    std::ifstream in(source);
    if (!in)
        throw InputError("cannot open '" + source + "' (not a file or bundled example)");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

std::string emit_workspace(const Workspace& ws) {
    ordered_json doc;
    doc["field"] = ws.field.name();
    ordered_json algebras = ordered_json::array();
    for (const auto& na : ws.algebras) {
        const FDAlgebra& a = *na.algebra;
        ordered_json j;
        j["name"] = na.name;
        j["dim"] = a.dim();
        j["basis"] = a.basis_names();
        j["structure"] = tensor_json(a.structure(), a.dim(), a.dim(), a.dim());
        j["unit"] = vector_json(a.unit());
        if (!a.declared_idempotents().empty()) {
            ordered_json ids = ordered_json::array();
            for (const auto& e : a.declared_idempotents())
                ids.push_back(vector_json(e));
            j["idempotents"] = std::move(ids);
        }
        algebras.push_back(std::move(j));
    }
    doc["algebras"] = std::move(algebras);
    ordered_json bimodules = ordered_json::array();
    for (const auto& nb : ws.bimodules) {
        ordered_json j;
        j["name"] = nb.name;
        j["left"] = nb.left;
        j["right"] = nb.right;
        j["dim"] = nb.module->dim();
        j["left_action"] = tensor_json(nb.module->left_action());
        j["right_action"] = tensor_json(nb.module->right_action());
        bimodules.push_back(std::move(j));
    }
    doc["bimodules"] = std::move(bimodules);
    ordered_json contexts = ordered_json::array();
    for (const auto& nc : ws.contexts) {
        ordered_json j;
        j["name"] = nc.name;
        j["A"] = nc.a;
        j["B"] = nc.b;
        j["M"] = nc.m;
        j["N"] = nc.n;
        if (!nc.context.phi.is_zero())
            j["phi"] = tensor_json(nc.context.phi);
        if (!nc.context.psi.is_zero())
            j["psi"] = tensor_json(nc.context.psi);
        contexts.push_back(std::move(j));
    }
    doc["contexts"] = std::move(contexts);
    ordered_json maps = ordered_json::array();
    for (const auto& nm : ws.maps) {
        ordered_json j;
        j["name"] = nm.name;
        j["target"] = nm.target;
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < nm.map.matrix.rows(); ++r)
            rows.push_back(vector_json(nm.map.matrix.row(r)));
        j["matrix"] = std::move(rows);
        maps.push_back(std::move(j));
    }
    doc["maps"] = std::move(maps);
    return doc.dump(2) + "\n";
}

} // namespace liederiv
