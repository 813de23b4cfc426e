#include "rdnet/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace rdnet {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << bytes;
    if (!out) throw IoError("write failed on " + path);
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

const json& require(const json& j, const char* field, const std::string& origin) {
    const auto it = j.find(field);
    if (it == j.end()) throw ParseError(origin + ": missing field '" + field + "'");
    return *it;
}

double positive_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    const double v = j.get<double>();
    if (!(v > 0.0)) throw ValidationError(where + ": must be strictly positive");
    return v;
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::uint64_t content_hash(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

// --- network files ---

NetworkFile parse_network_text(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);

    NetworkFile file;
    ReactionNetwork& net = file.network;

    const json& species = require(j, "species", origin);
    if (!species.is_array() || species.empty())
        throw ParseError(origin + ": 'species' must be a nonempty array");
    const Index m = static_cast<Index>(species.size());
    net.diffusion.resize(m);
    for (Index i = 0; i < m; ++i) {
        const std::string where = origin + ": species[" + std::to_string(i) + "]";
        const json& s = species[i];
        const json& name = require(s, "name", where);
        if (!name.is_string()) throw ParseError(where + ".name: expected a string");
        net.species.push_back(name.get<std::string>());
        const json& dif = require(s, "diffusion", where);
        if (!dif.is_number()) throw ParseError(where + ".diffusion: expected a number");
        net.diffusion(i) = dif.get<double>();
        if (net.diffusion(i) < 0.0)
            throw ValidationError(where + ".diffusion: must be nonnegative");
    }
    for (Index i = 0; i < m; ++i)
        for (Index k = i + 1; k < m; ++k)
            if (net.species[i] == net.species[k])
                throw ValidationError(origin + ": duplicate species name '" + net.species[i] + "'");

    const json& complexes = require(j, "complexes", origin);
    if (!complexes.is_array() || complexes.empty())
        throw ParseError(origin + ": 'complexes' must be a nonempty array");
    const Index c = static_cast<Index>(complexes.size());
    net.complexes = IntMatrix::Zero(m, c);
    for (Index rho = 0; rho < c; ++rho) {
        const std::string where = origin + ": complexes[" + std::to_string(rho) + "]";
        const json& comp = complexes[rho];
        if (!comp.is_object() || comp.empty())
            throw ParseError(where + ": expected a nonempty {species: coefficient} map");
        for (const auto& [key, value] : comp.items()) {
            const auto it = std::find(net.species.begin(), net.species.end(), key);
            if (it == net.species.end())
                throw ValidationError(where + ": unknown species '" + key + "'");
            if (!value.is_number_integer() || value.get<long long>() < 0)
                throw ValidationError(where + "['" + key +
                                      "']: coefficient must be a nonnegative integer");
            net.complexes(it - net.species.begin(), rho) = value.get<int>();
        }
    }

    const json& reactions = require(j, "reactions", origin);
    if (!reactions.is_array())
        throw ParseError(origin + ": 'reactions' must be an array");
    const Index r = static_cast<Index>(reactions.size());
    net.incidence = IntMatrix::Zero(c, r);
    net.k_fwd.resize(r);
    net.k_bwd.resize(r);
    for (Index jr = 0; jr < r; ++jr) {
        const std::string where = origin + ": reactions[" + std::to_string(jr) + "]";
        const json& re = reactions[jr];
        const json& src = require(re, "source", where);
        const json& prod = require(re, "product", where);
        if (!src.is_number_integer() || !prod.is_number_integer())
            throw ParseError(where + ": source/product must be complex indices");
        const Index s = src.get<Index>(), p = prod.get<Index>();
        if (s < 0 || s >= c) throw ValidationError(where + ".source: complex index out of range");
        if (p < 0 || p >= c) throw ValidationError(where + ".product: complex index out of range");
        if (s == p) throw ValidationError(where + ": source and product complexes coincide");
        net.incidence(s, jr) = -1;
        net.incidence(p, jr) = 1;
        net.k_fwd(jr) = positive_number(require(re, "k_fwd", where), where + ".k_fwd");
        net.k_bwd(jr) = positive_number(require(re, "k_bwd", where), where + ".k_bwd");
    }

    if (j.contains("x_star")) {
        const json& xs = j["x_star"];
        if (!xs.is_array() || static_cast<Index>(xs.size()) != m)
            throw ParseError(origin + ": 'x_star' must list one value per species");
        Vector x(m);
        for (Index i = 0; i < m; ++i)
            x(i) = positive_number(xs[i], origin + ": x_star[" + std::to_string(i) + "]");
        file.x_star = x;
    }

    validate(net);
    return file;
}

NetworkFile parse_network(const std::string& path) {
    return parse_network_text(read_file(path), path);
}

std::string network_to_text(const NetworkFile& file) {
    const ReactionNetwork& net = file.network;
    json j;
    j["species"] = json::array();
    for (Index i = 0; i < net.num_species(); ++i)
        j["species"].push_back({{"name", net.species[i]}, {"diffusion", net.diffusion(i)}});
    j["complexes"] = json::array();
    for (Index rho = 0; rho < net.num_complexes(); ++rho) {
        json comp = json::object();
        for (Index i = 0; i < net.num_species(); ++i)
            if (net.complexes(i, rho) != 0) comp[net.species[i]] = net.complexes(i, rho);
        j["complexes"].push_back(comp);
    }
    j["reactions"] = json::array();
    for (Index jr = 0; jr < net.num_reactions(); ++jr)
        j["reactions"].push_back({{"source", net.source_complex(jr)},
                                  {"product", net.product_complex(jr)},
                                  {"k_fwd", net.k_fwd(jr)},
                                  {"k_bwd", net.k_bwd(jr)}});
    if (file.x_star) {
        j["x_star"] = json::array();
        for (Index i = 0; i < file.x_star->size(); ++i) j["x_star"].push_back((*file.x_star)(i));
    }
    return j.dump(2) + "\n";
}

void write_network(const NetworkFile& file, const std::string& path) {
    write_file(path, network_to_text(file));
}

// --- mesh files ---

SimplicialComplex parse_mesh_text(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);

    if (j.contains("generator")) {
        const json& g = j["generator"];
        if (!g.is_string()) throw ParseError(origin + ": 'generator' must be a string");
        const std::string name = g.get<std::string>();
        if (name == "fig1") return fig1_mesh();
        if (name == "interval") {
            const json& nv = require(j, "n_v", origin);
            if (!nv.is_number_integer()) throw ParseError(origin + ": n_v must be an integer");
            const double length =
                j.contains("length") ? positive_number(j["length"], origin + ": length") : 1.0;
            return interval_mesh(nv.get<int>(), length);
        }
        if (name == "equilateral_strip") {
            const json& rows = require(j, "rows", origin);
            const json& cols = require(j, "cols", origin);
            if (!rows.is_number_integer() || !cols.is_number_integer())
                throw ParseError(origin + ": rows/cols must be integers");
            const double side =
                j.contains("side") ? positive_number(j["side"], origin + ": side") : 1.0;
            return equilateral_strip(rows.get<int>(), cols.get<int>(), side);
        }
        throw ParseError(origin + ": unknown generator '" + name + "'");
    }

    const json& dim = require(j, "dimension", origin);
    if (!dim.is_number_integer() || (dim.get<int>() != 1 && dim.get<int>() != 2))
        throw ParseError(origin + ": dimension must be 1 or 2");
    const int n = dim.get<int>();

    const json& verts = require(j, "vertices", origin);
    if (!verts.is_array() || verts.empty())
        throw ParseError(origin + ": 'vertices' must be a nonempty array");
    Matrix vertices(static_cast<Index>(verts.size()), n);
    for (Index i = 0; i < vertices.rows(); ++i) {
        const json& row = verts[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(origin + ": vertices[" + std::to_string(i) + "] must have " +
                             std::to_string(n) + " coordinates");
        for (int k = 0; k < n; ++k) {
            if (!row[k].is_number())
                throw ParseError(origin + ": vertices[" + std::to_string(i) + "][" +
                                 std::to_string(k) + "] must be a number");
            vertices(i, k) = row[k].get<double>();
        }
    }

    const json& cellsj = require(j, "cells", origin);
    if (!cellsj.is_array() || cellsj.empty())
        throw ParseError(origin + ": 'cells' must be a nonempty array");
    std::vector<std::vector<int>> cells;
    for (Index t = 0; t < static_cast<Index>(cellsj.size()); ++t) {
        const json& row = cellsj[t];
        if (!row.is_array() || static_cast<int>(row.size()) != n + 1)
            throw ParseError(origin + ": cells[" + std::to_string(t) + "] must have " +
                             std::to_string(n + 1) + " vertex indices");
        std::vector<int> cell;
        for (const json& v : row) {
            if (!v.is_number_integer())
                throw ParseError(origin + ": cells[" + std::to_string(t) +
                                 "] indices must be integers");
            cell.push_back(v.get<int>());
        }
        cells.push_back(std::move(cell));
    }
    return build_complex(vertices, cells);
}

SimplicialComplex parse_mesh(const std::string& path) {
    return parse_mesh_text(read_file(path), path);
}

std::string mesh_to_text(const SimplicialComplex& K) {
    json j;
    j["dimension"] = K.dimension;
    j["vertices"] = json::array();
    for (Index i = 0; i < K.num_vertices(); ++i) {
        json row = json::array();
        for (int k = 0; k < K.dimension; ++k) row.push_back(K.vertices(i, k));
        j["vertices"].push_back(row);
    }
    j["cells"] = K.cells;
    return j.dump(2) + "\n";
}

void write_mesh(const SimplicialComplex& K, const std::string& path) {
    write_file(path, mesh_to_text(K));
}

// --- trajectories ---

namespace {

json config_to_json(const IntegratorConfig& cfg) {
    json j;
    j["method"] = cfg.method == Method::ExplicitRK45 ? "rk45" : "imex";
    j["rtol"] = cfg.rtol;
    j["atol"] = cfg.atol;
    j["h_init"] = cfg.h_init;
    j["h_min"] = cfg.h_min;
    if (std::isfinite(cfg.h_max))
        j["h_max"] = cfg.h_max;
    else
        j["h_max"] = nullptr;  // JSON has no infinity
    j["t_end"] = cfg.t_end;
    j["max_steps"] = cfg.max_steps;
    return j;
}

}  // namespace

void export_trajectory(const Trajectory& traj, const CompartmentalSystem& sys,
                       const IntegratorConfig& config, TrajectoryFormat format,
                       const std::string& path) {
    if (traj.size() == 0) throw ValidationError("export_trajectory: empty trajectory");

    if (format == TrajectoryFormat::Csv) {
        std::string out;
        out += "t";
        for (Index j = 0; j < traj.N; ++j)
            for (Index i = 0; i < traj.m; ++i)
                out += "," + sys.net.species[i] + "_c" + std::to_string(j);
        out += ",G_d,disagreement_max,min_concentration\n";
        for (std::size_t s = 0; s < traj.size(); ++s) {
            out += fmt17(traj.t[s]);
            for (Index k = 0; k < traj.X[s].size(); ++k) out += "," + fmt17(traj.X[s](k));
            out += "," + fmt17(traj.energy[s]);
            out += "," + fmt17(traj.disagreement[s]);
            out += "," + fmt17(traj.min_concentration[s]);
            out += "\n";
        }
        write_file(path, out);
        return;
    }

    json j;
    j["metadata"] = {
        {"network_hash", hash_hex(content_hash(network_to_text({sys.net, sys.bf.x_star})))},
        {"mesh_hash", hash_hex(content_hash(mesh_to_text(sys.mesh)))},
        {"config", config_to_json(config)},
    };
    j["m"] = traj.m;
    j["N"] = traj.N;
    j["species"] = sys.net.species;
    j["termination"] = "t_end";
    j["t"] = traj.t;
    j["states"] = json::array();
    for (const Vector& X : traj.X)
        j["states"].push_back(std::vector<double>(X.data(), X.data() + X.size()));
    j["energy"] = traj.energy;
    j["disagreement"] = traj.disagreement;
    j["min_concentration"] = traj.min_concentration;
    j["deriv_inf"] = traj.deriv_inf;
    write_file(path, j.dump(2) + "\n");
}

Trajectory parse_trajectory(const std::string& path) {
    const std::string origin = path;
    const json j = parse_json(read_file(path), origin);
    Trajectory traj;
    const json& m = require(j, "m", origin);
    const json& N = require(j, "N", origin);
    if (!m.is_number_integer() || !N.is_number_integer())
        throw ParseError(origin + ": m and N must be integers");
    traj.m = m.get<Index>();
    traj.N = N.get<Index>();
    const json& t = require(j, "t", origin);
    const json& states = require(j, "states", origin);
    if (!t.is_array() || !states.is_array() || t.size() != states.size())
        throw ParseError(origin + ": 't' and 'states' must be arrays of equal length");
    traj.t = t.get<std::vector<double>>();
    for (const json& row : states) {
        const auto vals = row.get<std::vector<double>>();
        if (static_cast<Index>(vals.size()) != traj.m * traj.N)
            throw ParseError(origin + ": state row has wrong length");
        traj.X.push_back(Eigen::Map<const Vector>(vals.data(), vals.size()));
    }
    traj.energy = require(j, "energy", origin).get<std::vector<double>>();
    traj.disagreement = require(j, "disagreement", origin).get<std::vector<double>>();
    traj.min_concentration = require(j, "min_concentration", origin).get<std::vector<double>>();
    traj.deriv_inf = require(j, "deriv_inf", origin).get<std::vector<double>>();
    if (traj.energy.size() != traj.size() || traj.disagreement.size() != traj.size() ||
        traj.min_concentration.size() != traj.size() || traj.deriv_inf.size() != traj.size())
        throw ParseError(origin + ": monitor series lengths disagree with 't'");
    return traj;
}

BoundarySchedule parse_boundary_schedule(const std::string& path, Index expected_size) {
    const std::string origin = path;
    const json j = parse_json(read_file(path), origin);
    const json& type = require(j, "type", origin);
    if (!type.is_string()) throw ParseError(origin + ": 'type' must be a string");
    const std::string kind = type.get<std::string>();

    if (kind == "zero") {
        const Vector zero = Vector::Zero(expected_size);
        return [zero](double) { return zero; };
    }
    if (kind == "constant") {
        const json& values = require(j, "values", origin);
        if (!values.is_array() || static_cast<Index>(values.size()) != expected_size)
            throw ParseError(origin + ": 'values' must have m * N_b entries (" +
                             std::to_string(expected_size) + ")");
        Vector v(expected_size);
        for (Index i = 0; i < expected_size; ++i) {
            if (!values[i].is_number())
                throw ParseError(origin + ": values[" + std::to_string(i) + "] must be a number");
            v(i) = values[i].get<double>();
        }
        return [v](double) { return v; };
    }
    if (kind == "sine") {
        const json& amp = require(j, "amplitude", origin);
        if (!amp.is_array() || static_cast<Index>(amp.size()) != expected_size)
            throw ParseError(origin + ": 'amplitude' must have m * N_b entries");
        Vector a(expected_size);
        for (Index i = 0; i < expected_size; ++i) {
            if (!amp[i].is_number())
                throw ParseError(origin + ": amplitude[" + std::to_string(i) +
                                 "] must be a number");
            a(i) = amp[i].get<double>();
        }
        const double period = positive_number(require(j, "period", origin), origin + ": period");
        const double phase = j.contains("phase") ? j["phase"].get<double>() : 0.0;
        const double omega = 2.0 * std::numbers::pi / period;
        return [a, omega, phase](double t) -> Vector { return std::sin(omega * t + phase) * a; };
    }
    throw ParseError(origin + ": unknown schedule type '" + kind + "'");
}

}  // namespace rdnet
