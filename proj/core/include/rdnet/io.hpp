#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rdnet/analysis.hpp"

namespace rdnet {

/** Contents of a network spec file: the network itself plus an optional
    pinned equilibrium (when absent, one is derived from the rates). */
struct NetworkFile {
    ReactionNetwork network;
    std::optional<Vector> x_star;
};

NetworkFile parse_network(const std::string& path);
NetworkFile parse_network_text(const std::string& text, const std::string& origin);
std::string network_to_text(const NetworkFile& file);
void write_network(const NetworkFile& file, const std::string& path);

SimplicialComplex parse_mesh(const std::string& path);
SimplicialComplex parse_mesh_text(const std::string& text, const std::string& origin);
std::string mesh_to_text(const SimplicialComplex& K);
void write_mesh(const SimplicialComplex& K, const std::string& path);

enum class TrajectoryFormat { Csv, Json };

/** Write a completed trajectory.

    CSV columns: t, the state in compartment-major order, then G_d,
    disagreement_max, min_concentration. JSON mirrors the CSV content and
    adds metadata (network hash, mesh hash, integrator config) plus the
    derivative monitor. Output bytes are deterministic for identical runs. */
void export_trajectory(const Trajectory& traj, const CompartmentalSystem& sys,
                       const IntegratorConfig& config, TrajectoryFormat format,
                       const std::string& path);

/** Read back a JSON trajectory export; full-precision round trip. */
Trajectory parse_trajectory(const std::string& path);

/** Parse a boundary flux schedule spec ("zero", "constant", or "sine")
    into a callable; expected_size is m * N_b. */
BoundarySchedule parse_boundary_schedule(const std::string& path, Index expected_size);

/** FNV-1a content hash used to stamp exports with input provenance. */
std::uint64_t content_hash(std::string_view bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace rdnet
