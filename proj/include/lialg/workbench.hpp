#ifndef LIALG_WORKBENCH_HPP
#define LIALG_WORKBENCH_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "lialg/classification.hpp"

namespace lialg {

// catalog ---------------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    std::string parameters; // human-readable parameter signature with defaults
    std::string note;       // construction sketch
};

const std::vector<CatalogEntry>& catalog_entries();

/// Build a named algebra. Unknown keys in params are rejected.
LieAlgebra catalog(const std::string& name, const std::map<std::string, std::string>& params = {});

/// Solvable algebra built by iterated derivation extensions; deterministic in
/// the seed.
LieAlgebra random_solvable(std::uint64_t seed, int dim, std::int64_t p);

// .lie file format ------------------------------------------------------------

LieAlgebra parse_lie_file(const std::string& text);
std::string serialize(const LieAlgebra& l);

// reporting -------------------------------------------------------------------

/// JSON report for a verification run, also used (without records) by the
/// query commands.
std::string report_json(const std::string& name, const LieAlgebra& l,
                        const std::map<std::string, std::vector<Subspace>>& subspaces,
                        const std::vector<Record>& records);

// CLI -------------------------------------------------------------------------

/// Full command-line entry point; returns the process exit code.
/// 0 success/pass, 1 theorem failure, 2 usage or parse error, 3 budget or
/// unsupported input.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lialg

#endif
