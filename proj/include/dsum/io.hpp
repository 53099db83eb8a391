#pragma once

// JSON and CSV surfaces: cyclotomic numbers, sequence files, grid specs and
// verification reports. All parsing errors surface as ParseError (or
// InvalidGrid for semantically bad grids).

#include "dsum/cyclotomic.hpp"
#include "dsum/spectra.hpp"
#include "dsum/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsum::io {

/// "a/b" string or {"level": n, "coeffs": ["a/b", ...]} with phi(n) entries.
CycloNum parse_cyclonum(std::string_view json_text);
std::string cyclonum_json(const CycloNum& x);

/// Sequence file: {"n": int, "values": [scalar-or-cyclonum, ...]}.
PeriodicSeq parse_sequence(std::string_view json_text);
std::string sequence_json(const PeriodicSeq& C);

struct GridFile {
    GridSpec spec;
    /// Test-only mutation hook ("mutation_case" key); ignored unless the
    /// caller enables it.
    std::optional<std::size_t> mutation_case;
};

/// Reads a grid spec. Keys that are absent keep the values of the acceptance
/// grid for the identity; an explicitly empty list is an error.
/// Ranges are either integer lists or {"from": a, "to": b}.
GridFile parse_grid(std::string_view json_text, std::optional<Identity> identity);

/// {"campaign": ..., "cases": [...], "summary": {"pass", "fail", "skipped"}}
std::string report_json(const std::string& campaign, const std::vector<IdentityCase>& cases);

/// One row per case; columns identity, m, n, r, p, lambda, seq, T, status,
/// reason, lhs, rhs.
std::string report_csv(const std::vector<IdentityCase>& cases);

}  // namespace dsum::io
