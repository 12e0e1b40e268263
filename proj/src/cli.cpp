#include "coinv/cli.hpp"

#include "coinv/cache.hpp"
#include "coinv/errors.hpp"
#include "coinv/graded.hpp"
#include "coinv/kronecker.hpp"
#include "coinv/parallel.hpp"
#include "coinv/serialize.hpp"
#include "coinv/springer.hpp"
#include "coinv/tableau.hpp"
#include "coinv/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace coinv::cli {

namespace {

struct GlobalOptions {
    std::string cache_dir;
    unsigned jobs = 0;
    bool max_n_override = false;
};

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

class Session {
public:
    Session(const GlobalOptions& options, std::ostream& err) : options_(options)
    {
        const Limits limits = options.max_n_override ? Limits::unlimited() : Limits{};
        std::string dir = options.cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv(kCacheDirEnv))
                dir = env;
        if (dir.empty()) {
            tables_ = std::make_unique<MemoryTables>(limits);
        } else {
            auto disk = std::make_unique<DiskTableCache>(dir, limits, &err);
            disk_ = disk.get();
            tables_ = std::move(disk);
        }
        parallel::set_default_jobs(options.jobs);
    }

    TableSource& tables() { return *tables_; }

    Json provenance(Json conventions = Json::object()) const
    {
        Json cache = Json::array();
        if (disk_)
            for (const auto& e : disk_->used_entries())
                cache.push_back(Json{{"kind", e.kind}, {"n", e.n}, {"digest", e.digest}});
        conventions["degree_normalization"] = "q^i <-> H^{2i}";
        conventions["partition_order"] = "descending lexicographic from (n)";
        conventions["class_sign"] = "(-1)^(n - length(rho))";
        return Json{{"cache", std::move(cache)},
                    {"cache_schema_version", kSchemaVersion},
                    {"conventions", std::move(conventions)},
                    {"jobs", parallel::default_jobs()},
                    {"generated_at", utc_timestamp()}};
    }

private:
    GlobalOptions options_;
    std::unique_ptr<TableSource> tables_;
    DiskTableCache* disk_ = nullptr;
};

void emit(const ReportDocument& doc, const std::string& path, std::ostream& out)
{
    const std::string text = doc.serialize();
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::runtime_error("cannot open report file " + path);
    file << text;
    if (!file)
        throw std::runtime_error("failed writing report file " + path);
}

Partition partition_of_n(const std::string& text, int n, const char* what)
{
    const Partition p = Partition::parse(text);
    if (p.size() != n)
        throw std::invalid_argument(std::string(what) + " " + text + " is not a partition of " +
                                    std::to_string(n));
    return p;
}

int fake_degrees(Session&, int n, const std::string& lambda, std::ostream& out)
{
    if (n < 1)
        throw std::invalid_argument("--n must be positive");
    if (!lambda.empty()) {
        out << fake_degree_hook(partition_of_n(lambda, n, "--lambda")).to_string() << "\n";
        return kSuccess;
    }
    for (const auto& p : partitions_of(n))
        out << p.to_string() << ": " << fake_degree_hook(p).to_string() << "\n";
    return kSuccess;
}

int kronecker(Session& session, int n, const std::string& lambda, const std::string& mu, const std::string& nu,
              std::ostream& out)
{
    const auto table = session.tables().kronecker(n);
    out << table->coefficient(partition_of_n(lambda, n, "--lambda"), partition_of_n(mu, n, "--mu"),
                              partition_of_n(nu, n, "--nu"))
               .get_str()
        << "\n";
    return kSuccess;
}

int verify_flag(Session& session, int n, const std::string& degrees, const std::string& path,
                std::ostream& out, std::ostream& err)
{
    const DegreeFilter filter = DegreeFilter::parse(degrees);
    const LogConcavityReport report = verify_flag_log_concavity(session.tables(), n, filter);
    ReportDocument doc;
    doc.command = "verify-flag";
    doc.parameters = Json{{"n", n}, {"degrees", filter.to_string()}};
    doc.payload = report_payload(report);
    doc.provenance = session.provenance();
    emit(doc, path, out);
    err << "verify-flag n=" << n << " degrees=" << filter.to_string() << ": "
        << (report.pass() ? "pass" : "FAIL") << " (" << report.entries.size() << " values, min d = "
        << (report.min_d ? report.min_d->get_str() : std::string("n/a")) << ", " << report.violations.size()
        << " violations)\n";
    return report.pass() ? kSuccess : kViolations;
}

int unimodal(Session& session, int n, const std::string& path, std::ostream& out, std::ostream& err)
{
    const UnimodalityReport report = verify_d_unimodality(session.tables(), n);
    ReportDocument doc;
    doc.command = "unimodal";
    doc.parameters = Json{{"n", n}};
    doc.payload = report_payload(report);
    doc.provenance = session.provenance();
    emit(doc, path, out);
    err << "unimodal n=" << n << ": " << report.sequences.size() << " sequences, "
        << report.symmetry_failures.size() << " not symmetric, " << report.failures.size()
        << " not unimodal\n";
    if (!report.symmetry_failures.empty())
        throw InvariantViolation("d-sequence symmetry failed for n=" + std::to_string(n));
    return report.pass() ? kSuccess : kViolations;
}

int low_degree(Session& session, int n_max, const std::string& path, std::ostream& out, std::ostream& err)
{
    const LowDegreeReport report = low_degree_harness(session.tables(), n_max);
    ReportDocument doc;
    doc.command = "low-degree-harness";
    doc.parameters = Json{{"n_max", n_max}};
    doc.payload = report_payload(report);
    doc.provenance = session.provenance();
    emit(doc, path, out);
    for (int m = 1; m <= kLowDegreeMax; ++m) {
        int checked = 0;
        int bad = 0;
        for (const auto& e : report.entries)
            if (e.m == m) {
                ++checked;
                bad += e.d < 0 ? 1 : 0;
            }
        err << "low-degree m=" << m << " (degree and co-degree, n <= " << n_max << ", sufficient n <= "
            << 4 * m << "): " << checked << " values, " << bad << " negative\n";
    }
    if (!report.duality_mismatches.empty())
        throw InvariantViolation("co-degree values differ from degree values");
    return report.pass() ? kSuccess : kViolations;
}

int springer_scan(Session& session, int n_max, const std::string& path, std::ostream& out, std::ostream& err)
{
    const auto found = springer_counterexample_search(session.tables(), n_max);
    ReportDocument doc;
    doc.command = "springer-scan";
    doc.parameters = Json{{"n_max", n_max}};
    doc.payload = springer_payload(found, n_max);
    doc.provenance = session.provenance(Json{{"springer_grading", kSpringerGrading},
                                             {"charge_reading", kChargeReading},
                                             {"calibration", "mu=(1^n) equals the coinvariant table, n <= n_max"}});
    emit(doc, path, out);
    err << "springer-scan n <= " << n_max << ": " << found.size() << " counterexamples";
    for (std::size_t k = 0; k < found.size(); ++k)
        err << (k ? " " : ": ") << "(" << found[k].mu.to_string() << ")";
    err << "\n";
    return found.empty() ? kSuccess : kViolations;
}

int selftest(Session& session, int n_max, std::ostream& out)
{
    if (n_max < 1)
        throw std::invalid_argument("--n-max must be positive");
    TableSource& tables = session.tables();
    const Limits& limits = tables.limits();
    bool all_ok = true;
    const auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            out << "ERROR " << name << ": " << e.what() << "\n";
        }
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    for (int n = 1; n <= std::min(n_max, limits.character_cap); ++n)
        check("character orthogonality n=" + std::to_string(n),
              [&] { return verify_orthogonality(*tables.characters(n)); });
    for (int n = 1; n <= std::min(n_max, limits.kronecker_cap); ++n)
        check("kronecker identities n=" + std::to_string(n),
              [&] { return verify_kronecker_identities(*tables.kronecker(n)); });
    for (int n = 1; n <= n_max; ++n) {
        check("graded identities n=" + std::to_string(n),
              [&] { return verify_graded_identities(*tables.graded(n)); });
        check("duality n=" + std::to_string(n), [&] { return check_duality(*tables.graded(n)); });
    }
    for (int n = 1; n <= std::min(n_max, limits.character_cap); ++n)
        check("fake degree routes n=" + std::to_string(n), [&] {
            const auto chars = tables.characters(n);
            for (const auto& lambda : partitions_of(n)) {
                const IntPolynomial hook = fake_degree_hook(lambda);
                if (hook != fake_degree_syt(lambda) || hook != fake_degree_projection(lambda, *chars))
                    return false;
            }
            return true;
        });
    for (int n = 3; n <= std::min(n_max, limits.kronecker_cap); ++n)
        check("d symmetry n=" + std::to_string(n),
              [&] { return verify_d_unimodality(tables, n).symmetry_failures.empty(); });
    for (int n = 1; n <= std::min(n_max, limits.springer_cap); ++n)
        check("kostka-foulkes calibration n=" + std::to_string(n), [&] {
            verify_springer_calibration(n);
            for (const auto& lambda : partitions_of(n))
                for (const auto& mu : partitions_of(n)) {
                    const IntPolynomial k = kostka_foulkes_poly(lambda, mu);
                    if (k.coefficient(0) != (lambda == mu ? 1 : 0))
                        return false;
                    if (k.evaluate(1) != kostka_number(lambda, mu))
                        return false;
                }
            return true;
        });
    return all_ok ? kSuccess : kViolations;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Graded S_n-representations of the coinvariant ring and Springer fibers"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--cache-dir", global.cache_dir, std::string("Table cache directory (default: $") + kCacheDirEnv + ")");
    app.add_option("--jobs", global.jobs, "Worker threads (default: all cores)");
    app.add_flag("--max-n-override", global.max_n_override, "Lift the default size caps");

    int n = 0;
    int n_max = 0;
    std::string lambda, mu, nu, degrees = "all", out_path;

    auto* fake = app.add_subcommand("fake-degrees", "Print fake-degree polynomials");
    fake->add_option("--n", n, "n")->required();
    fake->add_option("--lambda", lambda, "partition, e.g. 2,1");

    auto* kron = app.add_subcommand("kronecker", "Print a Kronecker coefficient");
    kron->add_option("--n", n, "n")->required();
    kron->add_option("--lambda", lambda)->required();
    kron->add_option("--mu", mu)->required();
    kron->add_option("--nu", nu)->required();

    auto* flag = app.add_subcommand("verify-flag", "Equivariant log-concavity scan of the flag variety");
    flag->add_option("--n", n, "n")->required();
    flag->add_option("--degrees", degrees, "all | low:M | i1,i2,...");
    flag->add_option("--out", out_path, "report file");

    auto* uni = app.add_subcommand("unimodal", "Symmetry and unimodality of the d-sequences");
    uni->add_option("--n", n, "n")->required();
    uni->add_option("--out", out_path, "report file");

    auto* low = app.add_subcommand("low-degree-harness", "Degrees and co-degrees 1..3 for every n <= n-max");
    low->add_option("--n-max", n_max, "largest n")->required();
    low->add_option("--out", out_path, "report file");

    auto* spr = app.add_subcommand("springer-scan", "Search for Springer log-concavity counterexamples");
    spr->add_option("--n-max", n_max, "largest n")->required();
    spr->add_option("--out", out_path, "report file");

    auto* self = app.add_subcommand("selftest", "Run the invariant suites");
    n_max = 8;
    self->add_option("--n-max", n_max, "largest n")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kError;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Session session(global, err);
        if (fake->parsed())
            return fake_degrees(session, n, lambda, out);
        if (kron->parsed())
            return kronecker(session, n, lambda, mu, nu, out);
        if (flag->parsed())
            return verify_flag(session, n, degrees, out_path, out, err);
        if (uni->parsed())
            return unimodal(session, n, out_path, out, err);
        if (low->parsed())
            return low_degree(session, n_max, out_path, out, err);
        if (spr->parsed())
            return springer_scan(session, n_max, out_path, out, err);
        if (self->parsed())
            return selftest(session, n_max, out);
    } catch (const NonExactDivision& e) {
        err << "coinv " << command << ": inexact division (polynomials): " << e.what() << "\n";
    } catch (const NonIntegral& e) {
        err << "coinv " << command << ": non-integral class sum (kronecker): " << e.what() << "\n";
    } catch (const LimitExceeded& e) {
        err << "coinv " << command << ": size cap (use --max-n-override): " << e.what() << "\n";
    } catch (const InvariantViolation& e) {
        err << "coinv " << command << ": invariant violated: " << e.what() << "\n";
    } catch (const SchemaError& e) {
        err << "coinv " << command << ": cache/report schema: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "coinv " << command << ": " << e.what() << "\n";
    }
    return kError;
}

} // namespace coinv::cli
