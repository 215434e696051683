#ifndef DPB_CLI_IO_HPP
#define DPB_CLI_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dpb/bracket_families.hpp"
#include "dpb/check_report.hpp"
#include "dpb/matrix_involutions.hpp"
#include "dpb/rep_poisson.hpp"

namespace dpb {

inline constexpr const char* engine_version = "0.1.0";

struct ParseError : std::runtime_error {
    ParseError(int line_, int col_, const std::string& message);
    int line, col;
};

struct ValidationError : std::runtime_error {
    ValidationError(std::string field_, const std::string& message);
    std::string field; // dotted path, e.g. "bracket.r"
};

// One verification job: a bracket source, optional involution and form, and
// an ordered check list with its sampling scope.
struct JobSpec {
    // [bracket]
    std::string family; // kks | linear | quadratic | ors
    int L = 0;
    std::vector<Rat> s;      // linear: L^3 entries, order (k;i,j)
    std::vector<Rat> r;      // quadratic: L^4 entries, order (k,l;i,j)
    std::vector<Rat> lambda; // ors: L entries

    // [involution] (optional)
    std::string involution; // phi_plus | phi_minus | signed_perm | ""
    std::vector<int> pi, eps;

    // [form] (optional)
    std::string form = ""; // identity | symplectic | theta_orthogonal |
                           // theta_symplectic | ""
    int d = 0;
    int N = 0; // theta forms only; then d = N

    // [checks]
    std::vector<std::string> checks;
    int max_word_len = 3;
    int samples = 20;
    std::uint64_t seed = 1;
    bool exhaustive = false;

    friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

// Line-oriented grammar with sections [bracket], [involution], [form],
// [checks]; "key = value" entries, "#" comments, bracketed arrays, rationals
// "p/q". Unknown sections/keys are rejected.
JobSpec parse_spec(const std::string& text);

// Canonical text form; parse_spec(serialize_spec(j)) == j.
std::string serialize_spec(const JobSpec& job);

DoubleBracket build_bracket(const JobSpec& job);
InvolutionSpec build_involution(const JobSpec& job); // requires [involution]
BilinearForm build_form(const JobSpec& job);         // requires [form]

struct CheckRecord {
    std::string name;
    CheckReport report;
    long long millis = 0;
};

struct Report {
    std::string version = engine_version;
    std::string job_echo; // canonical serialized spec
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;
    nlohmann::json structure; // induced-structure export, null unless asked

    bool all_passed() const;
};

// Executes the job's checks in declared order. Known check names:
//   jacobi, adapted, associative, commutative, r_skew, aybe, ring_jacobi,
//   multiplicative, well_defined, equivariance, jacobiator, centralizer.
// Ring-level checks run on the twisted structure when both an involution and
// a form are given, on the plain one otherwise. Module errors are captured
// as failed records; invalid check names raise ValidationError up front.
Report run_job(const JobSpec& job, int threads = 1,
               bool export_structure = false);

// Variables, pairwise bracket table and (twisted) the relation system with
// the free-variable list.
nlohmann::json structure_json(const PoissonStructure& P);

// {engine_version, rng, job_echo, checks: [...]} (+ structure when present).
// millis fields are emitted only when with_timings is set, keeping default
// reports byte-identical across runs.
nlohmann::json report_json(const Report& r, bool with_timings = false);

} // namespace dpb

#endif
