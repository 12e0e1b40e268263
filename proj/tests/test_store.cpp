#include "coinv/cache.hpp"
#include "coinv/cli.hpp"
#include "coinv/serialize.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace coinv;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;

    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("coinv-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

Json payload_of(const std::string& report)
{
    return ReportDocument::parse(report).payload;
}

} // namespace

TEST_CASE("sha256")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("integer encoding")
{
    CHECK(integer_to_json(Integer(42)) == Json(42));
    CHECK(integer_to_json(Integer(-7)) == Json(-7));
    const Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big) == Json("123456789012345678901234567890"));
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_from_json(Json(-7)) == -7);
    CHECK_THROWS(integer_from_json(Json("12x")));
    CHECK_THROWS(integer_from_json(Json(1.5)));
}

TEST_CASE("table serialization round trips")
{
    const CharacterTable chars = build_character_table(6);
    CHECK(character_table_from_json(to_json(chars)).values() == chars.values());
    const GradedMultiplicityTable graded = build_graded_table(6);
    CHECK(graded_table_from_json(to_json(graded)) == graded);
    const KroneckerTable kron = build_kronecker_table(chars);
    CHECK(kronecker_table_from_json(to_json(kron)) == kron);

    Json wrong = to_json(graded);
    wrong["schema_version"] = kSchemaVersion + 1;
    CHECK_THROWS_AS(graded_table_from_json(wrong), SchemaError);
    Json mislabeled = to_json(graded);
    mislabeled["kind"] = "kron";
    CHECK_THROWS_AS(graded_table_from_json(mislabeled), SchemaError);
}

TEST_CASE("manifest round trip")
{
    CacheManifest m;
    m.upsert({"kron", 5, "kron-5.json", "aa"});
    m.upsert({"char", 5, "char-5.json", "bb"});
    m.upsert({"char", 3, "char-3.json", "cc"});
    m.upsert({"char", 5, "char-5.json", "dd"});
    REQUIRE(m.entries.size() == 3);
    CHECK(m.entries[0].n == 3);
    CHECK(m.entries[1].digest == "dd");
    CHECK(m.find("kron", 5) != nullptr);
    CHECK(m.find("kron", 4) == nullptr);
    const CacheManifest back = CacheManifest::from_json(m.to_json());
    CHECK(back.entries == m.entries);
}

TEST_CASE("disk cache: cold, warm and tampered")
{
    TempDir dir;
    Json cold_payload;
    {
        DiskTableCache cache(dir.path);
        cold_payload = report_payload(verify_flag_log_concavity(cache, 6));
        CHECK(cache.stats().built == 3);
        CHECK(cache.stats().loaded == 0);
        CHECK(fs::exists(dir.path / "manifest.json"));
        CHECK(fs::exists(dir.path / DiskTableCache::file_name("kron", 6)));
        const CacheManifest manifest = cache.read_manifest();
        const CacheEntry* entry = manifest.find("kron", 6);
        REQUIRE(entry != nullptr);
        CHECK(entry->digest == sha256_hex(slurp(dir.path / entry->file)));
        CHECK(cache.used_entries().size() == 3);
    }
    {
        DiskTableCache cache(dir.path);
        CHECK(report_payload(verify_flag_log_concavity(cache, 6)) == cold_payload);
        CHECK(cache.stats().built == 0);
        // The Kronecker table loads directly, so characters are never requested.
        CHECK(cache.stats().loaded == 2);
    }
    {
        const fs::path target = dir.path / DiskTableCache::file_name("graded", 6);
        std::ofstream(target, std::ios::binary | std::ios::app) << " ";

        std::ostringstream warnings;
        DiskTableCache cache(dir.path, {}, &warnings);
        CHECK(report_payload(verify_flag_log_concavity(cache, 6)) == cold_payload);
        CHECK(cache.stats().rejected == 1);
        CHECK(cache.stats().built == 1);
        CHECK(warnings.str().find("digest") != std::string::npos);
        CHECK(cache.read_manifest().find("graded", 6)->digest == sha256_hex(slurp(target)));
    }
    {
        // Digest matches but the content is wrong: validation must still reject it.
        const fs::path target = dir.path / DiskTableCache::file_name("graded", 6);
        Json table = Json::parse(slurp(target));
        table["b"][0][0] = 5;
        const std::string bytes = table.dump(1);
        std::ofstream(target, std::ios::binary | std::ios::trunc) << bytes;
        CacheManifest manifest = CacheManifest::from_json(Json::parse(slurp(dir.path / "manifest.json")));
        manifest.upsert({"graded", 6, DiskTableCache::file_name("graded", 6), sha256_hex(bytes)});
        std::ofstream(dir.path / "manifest.json", std::ios::trunc) << manifest.to_json().dump(1);

        DiskTableCache cache(dir.path);
        CHECK(*cache.graded(6) == build_graded_table(6));
        CHECK(cache.stats().rejected == 1);
    }
}

TEST_CASE("reports round trip byte for byte")
{
    MemoryTables tables;
    ReportDocument doc;
    doc.command = "verify-flag";
    doc.parameters = {{"n", 5}};
    doc.provenance = {{"jobs", 1}};
    doc.payload = report_payload(verify_flag_log_concavity(tables, 5));
    const std::string text = doc.serialize();
    CHECK(ReportDocument::parse(text).serialize() == text);
    CHECK_THROWS_AS(ReportDocument::parse("{\"schema_version\": 99}"), SchemaError);
}

TEST_CASE("command line")
{
    Run r = invoke({"fake-degrees", "--n", "3", "--lambda", "2,1"});
    CHECK(r.status == cli::kSuccess);
    CHECK(r.out == "q + q^2\n");

    r = invoke({"kronecker", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"});
    CHECK(r.status == cli::kSuccess);
    CHECK(r.out == "1\n");

    r = invoke({"kronecker", "--n", "3", "--lambda", "2,2", "--mu", "2,1", "--nu", "2,1"});
    CHECK(r.status == cli::kError);
    CHECK_FALSE(r.err.empty());

    r = invoke({"kronecker", "--n", "13", "--lambda", "13", "--mu", "13", "--nu", "13"});
    CHECK(r.status == cli::kError);
    CHECK(r.err.find("--max-n-override") != std::string::npos);

    CHECK(invoke({"fake-degrees"}).status == cli::kError);
    CHECK(invoke({"no-such-command"}).status == cli::kError);
    CHECK(invoke({"verify-flag", "--n", "5", "--degrees", "low:x"}).status == cli::kError);

    r = invoke({"verify-flag", "--n", "5"});
    CHECK(r.status == cli::kSuccess);
    const ReportDocument doc = ReportDocument::parse(r.out);
    CHECK(doc.command == "verify-flag");
    CHECK(doc.payload["status"] == "pass");
    CHECK(doc.provenance.contains("generated_at"));

    r = invoke({"springer-scan", "--n-max", "7"});
    CHECK(r.status == cli::kViolations);
    CHECK(payload_of(r.out)["counterexamples"].size() == 1);

    r = invoke({"springer-scan", "--n-max", "6"});
    CHECK(r.status == cli::kSuccess);

    r = invoke({"selftest", "--n-max", "6"});
    CHECK(r.status == cli::kSuccess);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("reports go to --out and are independent of the worker count")
{
    TempDir dir;
    const std::string one = (dir.path / "one.json").string();
    const std::string many = (dir.path / "many.json").string();
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"verify-flag", "--n", "7"}, {"unimodal", "--n", "6"}, {"low-degree-harness", "--n-max", "7"}}) {
        auto a = cmd;
        a.insert(a.begin(), {"--jobs", "1"});
        a.insert(a.end(), {"--out", one});
        auto b = cmd;
        b.insert(b.begin(), {"--jobs", "4"});
        b.insert(b.end(), {"--out", many});
        const Run ra = invoke(a);
        const Run rb = invoke(b);
        CHECK(ra.status == cli::kSuccess);
        CHECK(rb.status == cli::kSuccess);
        CHECK(ra.out.empty());
        CHECK(payload_of(slurp(one)) == payload_of(slurp(many)));
        CHECK(ReportDocument::parse(slurp(one)).provenance["jobs"] == 1);
    }
}

TEST_CASE("cache directory from the environment")
{
    TempDir dir;
    ::setenv(cli::kCacheDirEnv, dir.path.c_str(), 1);
    const Run cold = invoke({"verify-flag", "--n", "5"});
    const Run warm = invoke({"verify-flag", "--n", "5"});
    ::unsetenv(cli::kCacheDirEnv);
    CHECK(cold.status == cli::kSuccess);
    CHECK(warm.status == cli::kSuccess);
    CHECK(fs::exists(dir.path / "manifest.json"));
    CHECK(payload_of(cold.out) == payload_of(warm.out));
    const ReportDocument doc = ReportDocument::parse(warm.out);
    CHECK(doc.provenance["cache"].size() == 2);

    TempDir other;
    const Run flag = invoke({"--cache-dir", other.path.string(), "verify-flag", "--n", "4"});
    CHECK(flag.status == cli::kSuccess);
    CHECK(fs::exists(other.path / "manifest.json"));
}
