#include "dpb/cli_io.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>

#include "dpb/centralizer.hpp"
#include "dpb/rng.hpp"

namespace dpb {

ParseError::ParseError(int line_, int col_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) + ": " + message),
      line(line_), col(col_) {}

ValidationError::ValidationError(std::string field_,
                                 const std::string& message)
    : std::runtime_error(field_ + ": " + message), field(std::move(field_)) {}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct ValueCtx {
    int line;
    int col; // 1-based start of the value in the raw line
};

long long parse_int(const ValueCtx& c, const std::string& v) {
    try {
        std::size_t used = 0;
        long long n = std::stoll(v, &used);
        if (used != v.size())
            throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ParseError(c.line, c.col, "malformed integer '" + v + "'");
    }
}

std::uint64_t parse_u64(const ValueCtx& c, const std::string& v) {
    try {
        std::size_t used = 0;
        std::uint64_t n = std::stoull(v, &used);
        if (used != v.size() || v[0] == '-')
            throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ParseError(c.line, c.col,
                         "malformed unsigned integer '" + v + "'");
    }
}

bool parse_bool(const ValueCtx& c, const std::string& v) {
    if (v == "true")
        return true;
    if (v == "false")
        return false;
    throw ParseError(c.line, c.col, "expected true or false, got '" + v + "'");
}

Rat parse_rat(const ValueCtx& c, const std::string& v) {
    try {
        return parse_rational(v);
    } catch (const std::exception&) {
        throw ParseError(c.line, c.col, "malformed rational '" + v + "'");
    }
}

std::vector<std::string> split_array(const ValueCtx& c, const std::string& v) {
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw ParseError(c.line, c.col, "expected a bracketed array");
    std::string inner = trim(v.substr(1, v.size() - 2));
    std::vector<std::string> parts;
    if (inner.empty())
        return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = inner.find(',', pos);
        std::string piece = trim(inner.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (piece.empty())
            throw ParseError(c.line, c.col, "empty array entry");
        parts.push_back(piece);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return parts;
}

std::vector<Rat> parse_rat_array(const ValueCtx& c, const std::string& v) {
    std::vector<Rat> out;
    for (const std::string& p : split_array(c, v))
        out.push_back(parse_rat(c, p));
    return out;
}

std::vector<int> parse_int_array(const ValueCtx& c, const std::string& v) {
    std::vector<int> out;
    for (const std::string& p : split_array(c, v))
        out.push_back(static_cast<int>(parse_int(c, p)));
    return out;
}

const std::set<std::string>& known_checks() {
    static const std::set<std::string> names = {
        "jacobi",       "adapted",        "associative", "commutative",
        "r_skew",       "aybe",           "ring_jacobi", "multiplicative",
        "well_defined", "equivariance",   "jacobiator",  "centralizer"};
    return names;
}

void validate(JobSpec& job) {
    const std::set<std::string> families = {"kks", "linear", "quadratic",
                                            "ors"};
    if (job.family.empty())
        throw ValidationError("bracket.family", "required");
    if (!families.count(job.family))
        throw ValidationError("bracket.family",
                              "unknown family '" + job.family + "'");
    if (job.L < 1)
        throw ValidationError("bracket.L", "must be at least 1");

    std::size_t L = static_cast<std::size_t>(job.L);
    auto need_size = [&](const char* field, const std::vector<Rat>& v,
                         std::size_t want) {
        if (v.size() != want)
            throw ValidationError(std::string("bracket.") + field,
                                  "expected " + std::to_string(want) +
                                      " entries, got " +
                                      std::to_string(v.size()));
    };
    auto forbid = [&](const char* field, bool present) {
        if (present)
            throw ValidationError(std::string("bracket.") + field,
                                  "not a parameter of family '" + job.family +
                                      "'");
    };
    if (job.family == "kks") {
        forbid("s", !job.s.empty());
        forbid("r", !job.r.empty());
        forbid("lambda", !job.lambda.empty());
    } else if (job.family == "linear") {
        need_size("s", job.s, L * L * L);
        forbid("r", !job.r.empty());
        forbid("lambda", !job.lambda.empty());
    } else if (job.family == "quadratic") {
        need_size("r", job.r, L * L * L * L);
        forbid("s", !job.s.empty());
        forbid("lambda", !job.lambda.empty());
    } else { // ors
        need_size("lambda", job.lambda, L);
        forbid("s", !job.s.empty());
        forbid("r", !job.r.empty());
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = i + 1; j < L; ++j)
                if (job.lambda[i] == job.lambda[j])
                    throw ValidationError("bracket.lambda",
                                          "parameters must be distinct");
    }

    if (!job.involution.empty()) {
        if (job.involution == "signed_perm") {
            if (job.pi.size() != L)
                throw ValidationError("involution.pi",
                                      "expected " + std::to_string(job.L) +
                                          " entries");
            if (job.eps.size() != L)
                throw ValidationError("involution.eps",
                                      "expected " + std::to_string(job.L) +
                                          " entries");
        } else if (job.involution == "phi_plus" ||
                   job.involution == "phi_minus") {
            if (!job.pi.empty() || !job.eps.empty())
                throw ValidationError("involution.pi",
                                      "only valid with kind signed_perm");
        } else {
            throw ValidationError("involution.kind",
                                  "unknown kind '" + job.involution + "'");
        }
    } else if (!job.pi.empty() || !job.eps.empty()) {
        throw ValidationError("involution.kind", "required when pi/eps given");
    }

    if (!job.form.empty()) {
        bool theta = job.form == "theta_orthogonal" ||
                     job.form == "theta_symplectic";
        if (job.form != "identity" && job.form != "symplectic" && !theta)
            throw ValidationError("form.kind",
                                  "unknown kind '" + job.form + "'");
        if (theta) {
            if (job.N < 2)
                throw ValidationError("form.N", "must be at least 2");
            if (job.form == "theta_symplectic" && job.N % 2 != 0)
                throw ValidationError("form.N",
                                      "symplectic size must be even");
            if (job.d != 0 && job.d != job.N)
                throw ValidationError("form.d",
                                      "theta forms fix d = N");
            job.d = job.N;
        } else {
            if (job.N != 0)
                throw ValidationError("form.N",
                                      "only valid for theta forms");
            if (job.d < 1)
                throw ValidationError("form.d", "required");
            if (job.form == "symplectic" && job.d % 2 != 0)
                throw ValidationError("form.d",
                                      "symplectic dimension must be even");
        }
    } else if (job.N != 0) {
        throw ValidationError("form.kind", "required when N given");
    }

    for (const std::string& name : job.checks)
        if (!known_checks().count(name))
            throw ValidationError("checks.check",
                                  "unknown check '" + name + "'");
    if (job.max_word_len < 0)
        throw ValidationError("checks.max_word_len", "must be nonnegative");
    if (job.samples < 0)
        throw ValidationError("checks.samples", "must be nonnegative");
}

} // namespace

JobSpec parse_spec(const std::string& text) {
    JobSpec job;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(lineno, 1, "unterminated section header");
            std::string name = line.substr(1, line.size() - 2);
            if (name != "bracket" && name != "involution" && name != "form" &&
                name != "checks")
                throw ParseError(lineno, 1, "unknown section [" + name + "]");
            section = name;
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, 1, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError(lineno, 1, "missing key before '='");
        std::size_t vpos = raw.find(val.empty() ? "=" : val, raw.find('='));
        ValueCtx c{lineno, static_cast<int>(vpos) + 1};
        if (val.empty())
            throw ParseError(c.line, c.col, "missing value for '" + key + "'");

        if (section.empty())
            throw ParseError(lineno, 1, "key outside a section");
        auto unknown = [&]() -> ParseError {
            return ParseError(lineno, 1,
                              "unknown key '" + key + "' in [" + section +
                                  "]");
        };
        if (section == "bracket") {
            if (key == "family")
                job.family = val;
            else if (key == "L")
                job.L = static_cast<int>(parse_int(c, val));
            else if (key == "s")
                job.s = parse_rat_array(c, val);
            else if (key == "r")
                job.r = parse_rat_array(c, val);
            else if (key == "lambda")
                job.lambda = parse_rat_array(c, val);
            else
                throw unknown();
        } else if (section == "involution") {
            if (key == "kind")
                job.involution = val;
            else if (key == "pi")
                job.pi = parse_int_array(c, val);
            else if (key == "eps")
                job.eps = parse_int_array(c, val);
            else
                throw unknown();
        } else if (section == "form") {
            if (key == "kind")
                job.form = val;
            else if (key == "d")
                job.d = static_cast<int>(parse_int(c, val));
            else if (key == "N")
                job.N = static_cast<int>(parse_int(c, val));
            else
                throw unknown();
        } else { // checks
            if (key == "check")
                job.checks.push_back(val);
            else if (key == "max_word_len")
                job.max_word_len = static_cast<int>(parse_int(c, val));
            else if (key == "samples")
                job.samples = static_cast<int>(parse_int(c, val));
            else if (key == "seed")
                job.seed = parse_u64(c, val);
            else if (key == "exhaustive")
                job.exhaustive = parse_bool(c, val);
            else
                throw unknown();
        }
    }
    validate(job);
    return job;
}

namespace {

std::string rat_array_str(const std::vector<Rat>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

std::string int_array_str(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

} // namespace

std::string serialize_spec(const JobSpec& job) {
    std::ostringstream os;
    os << "[bracket]\n";
    os << "family = " << job.family << "\n";
    os << "L = " << job.L << "\n";
    if (!job.s.empty())
        os << "s = " << rat_array_str(job.s) << "\n";
    if (!job.r.empty())
        os << "r = " << rat_array_str(job.r) << "\n";
    if (!job.lambda.empty())
        os << "lambda = " << rat_array_str(job.lambda) << "\n";
    if (!job.involution.empty()) {
        os << "[involution]\n";
        os << "kind = " << job.involution << "\n";
        if (!job.pi.empty())
            os << "pi = " << int_array_str(job.pi) << "\n";
        if (!job.eps.empty())
            os << "eps = " << int_array_str(job.eps) << "\n";
    }
    if (!job.form.empty()) {
        os << "[form]\n";
        os << "kind = " << job.form << "\n";
        if (job.N != 0)
            os << "N = " << job.N << "\n";
        else
            os << "d = " << job.d << "\n";
    }
    os << "[checks]\n";
    for (const std::string& name : job.checks)
        os << "check = " << name << "\n";
    os << "max_word_len = " << job.max_word_len << "\n";
    os << "samples = " << job.samples << "\n";
    os << "seed = " << job.seed << "\n";
    os << "exhaustive = " << (job.exhaustive ? "true" : "false") << "\n";
    return os.str();
}

DoubleBracket build_bracket(const JobSpec& job) {
    if (job.family == "kks")
        return kks(job.L);
    if (job.family == "linear") {
        StructureConstants s{job.L, job.s};
        return linear_bracket(s);
    }
    if (job.family == "quadratic") {
        RTensor r{job.L, job.r};
        return quadratic_bracket(r);
    }
    return quadratic_bracket(ors_example(job.lambda));
}

InvolutionSpec build_involution(const JobSpec& job) {
    if (job.involution.empty())
        throw ValidationError("involution", "section required for this check");
    if (job.involution == "phi_plus")
        return InvolutionSpec::phi_plus(job.L);
    if (job.involution == "phi_minus")
        return InvolutionSpec::phi_minus(job.L);
    return InvolutionSpec::signed_perm(job.pi, job.eps);
}

BilinearForm build_form(const JobSpec& job) {
    if (job.form.empty())
        throw ValidationError("form", "section required for this check");
    if (job.form == "identity")
        return standard_identity_form(job.d);
    if (job.form == "symplectic")
        return standard_symplectic_form(job.d);
    return theta_form(job.N, job.form == "theta_orthogonal"
                                 ? GroupKind::orthogonal
                                 : GroupKind::symplectic);
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.report.passed; });
}

namespace {

std::string lin_str(const LinExpr& e) {
    if (e.zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [v, c] : e.terms()) {
        if (!first)
            out += " + ";
        first = false;
        out += to_string(c) + "*" + var_str(v);
    }
    return out;
}

// The RTensor under test for the r-level checks.
RTensor job_rtensor(const JobSpec& job) {
    if (job.family == "quadratic")
        return RTensor{job.L, job.r};
    if (job.family == "ors")
        return ors_example(job.lambda);
    throw ValidationError("bracket.family",
                          "r-level checks need a quadratic or ors family");
}

} // namespace

nlohmann::json structure_json(const PoissonStructure& P) {
    nlohmann::json j;
    j["mode"] = P.mode() == RingMode::plain ? "plain" : "twisted";
    j["d"] = P.dim();
    j["generators"] = P.generator_count();
    nlohmann::json vars = nlohmann::json::array();
    for (const VarId& v : P.ring_vars())
        vars.push_back(var_str(v));
    j["ring_vars"] = vars;
    nlohmann::json table = nlohmann::json::array();
    for (const VarId& a : P.ring_vars())
        for (const VarId& b : P.ring_vars()) {
            if (!(a < b))
                continue; // skew closes the table
            const PolyElem& val = P.pair_bracket(a, b);
            if (val.zero())
                continue;
            table.push_back({{"a", var_str(a)},
                             {"b", var_str(b)},
                             {"value", poly_str(val)}});
        }
    j["pair_brackets"] = table;
    if (P.mode() == RingMode::twisted) {
        nlohmann::json frees = nlohmann::json::array();
        for (const VarId& v : P.normal_form().free_vars())
            frees.push_back(var_str(v));
        j["free_vars"] = frees;
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& [v, expr] : P.normal_form().substitution()) {
            if (P.normal_form().is_free(v))
                continue;
            rels.push_back({{"var", var_str(v)}, {"value", lin_str(expr)}});
        }
        j["relations"] = rels;
    }
    return j;
}

Report run_job(const JobSpec& job, int threads, bool export_structure) {
    for (const std::string& name : job.checks)
        if (!known_checks().count(name))
            throw ValidationError("checks.check",
                                  "unknown check '" + name + "'");

    Report out;
    out.job_echo = serialize_spec(job);
    out.seed = job.seed;
    DoubleBracket bracket = build_bracket(job);

    std::optional<PoissonStructure> ring;
    auto get_ring = [&]() -> const PoissonStructure& {
        if (!ring) {
            if (!job.involution.empty() && !job.form.empty())
                ring = PoissonStructure::induce_twisted(
                    bracket, build_involution(job),
                    MatrixInvolution::from_form(build_form(job)), job.d);
            else if (job.d >= 1 && job.form.empty())
                ring = PoissonStructure::induce_plain(bracket, job.d);
            else if (!job.form.empty())
                ring = PoissonStructure::induce_plain(bracket, job.d);
            else
                throw ValidationError("form.d",
                                      "ring-level checks need a dimension");
        }
        return *ring;
    };

    auto dispatch = [&](const std::string& name) -> CheckReport {
        if (name == "jacobi")
            return check_double_jacobi(bracket, job.max_word_len, job.samples,
                                       job.seed);
        if (name == "adapted")
            return check_phi_adapted(bracket, build_involution(job),
                                     job.samples, job.max_word_len, job.seed);
        if (name == "associative" || name == "commutative") {
            if (job.family != "linear")
                throw ValidationError("bracket.family",
                                      "structure-constant checks need the "
                                      "linear family");
            StructureConstants s{job.L, job.s};
            return name == "associative" ? check_associative(s)
                                         : check_commutative(s);
        }
        if (name == "r_skew")
            return check_r_skew(job_rtensor(job));
        if (name == "aybe")
            return check_aybe(job_rtensor(job));
        if (name == "ring_jacobi")
            return check_jacobi_ring(get_ring(), job.exhaustive, job.samples,
                                     job.seed, threads);
        if (name == "multiplicative")
            return check_multiplicative(get_ring(), job.max_word_len);
        if (name == "well_defined")
            return check_twisted_well_defined(
                bracket, build_involution(job),
                MatrixInvolution::from_form(build_form(job)), job.d,
                job.max_word_len);
        if (name == "equivariance")
            return check_equivariance(get_ring());
        if (name == "jacobiator") {
            if (job.d < 1)
                throw ValidationError("form.d",
                                      "jacobiator check needs a dimension");
            if (!job.involution.empty() && !job.form.empty()) {
                InvolutionSpec phi = build_involution(job);
                TauCoeffs tau =
                    MatrixInvolution::from_form(build_form(job)).coeffs();
                return check_jacobiator_formula(bracket, job.d,
                                                RingMode::twisted, &phi, &tau,
                                                job.samples, job.max_word_len,
                                                job.seed);
            }
            return check_jacobiator_formula(bracket, job.d, RingMode::plain,
                                            nullptr, nullptr, job.samples,
                                            job.max_word_len, job.seed);
        }
        // centralizer
        if (job.form != "theta_orthogonal" && job.form != "theta_symplectic")
            throw ValidationError("form.kind",
                                  "centralizer check needs a theta form");
        return check_word_bracket_formula(job.N,
                                          job.form == "theta_orthogonal"
                                              ? GroupKind::orthogonal
                                              : GroupKind::symplectic,
                                          job.L, job.max_word_len, false,
                                          threads);
    };

    for (const std::string& name : job.checks) {
        CheckRecord rec;
        rec.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            rec.report = dispatch(name);
        } catch (const std::exception& e) {
            rec.report = CheckReport::fail(
                "aborted by error", Counterexample{"exception", e.what(), ""});
        }
        auto t1 = std::chrono::steady_clock::now();
        rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         t1 - t0)
                         .count();
        out.checks.push_back(std::move(rec));
    }

    if (export_structure) {
        try {
            out.structure = structure_json(get_ring());
        } catch (const std::exception& e) {
            out.checks.push_back(CheckRecord{
                "structure_export",
                CheckReport::fail("aborted by error",
                                  Counterexample{"exception", e.what(), ""}),
                0});
        }
    }
    return out;
}

nlohmann::json report_json(const Report& r, bool with_timings) {
    nlohmann::json j;
    j["engine_version"] = r.version;
    j["rng"] = {{"algorithm", SplitMix64::algorithm}, {"seed", r.seed}};
    j["job_echo"] = r.job_echo;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckRecord& rec : r.checks) {
        nlohmann::json o;
        o["name"] = rec.name;
        o["passed"] = rec.report.passed;
        o["scope"] = rec.report.scope;
        if (rec.report.counterexample) {
            o["counterexample"] = {{"inputs", rec.report.counterexample->inputs},
                                   {"lhs", rec.report.counterexample->lhs},
                                   {"rhs", rec.report.counterexample->rhs}};
        }
        if (with_timings)
            o["millis"] = rec.millis;
        arr.push_back(std::move(o));
    }
    j["checks"] = arr;
    if (!r.structure.is_null())
        j["structure"] = r.structure;
    return j;
}

} // namespace dpb
