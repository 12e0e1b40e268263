#include "coinv/serialize.hpp"

#include <limits>

namespace coinv {

Json integer_to_json(const Integer& x)
{
    if (x.fits_slong_p())
        return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer() && !j.is_number_unsigned())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        return Integer(std::to_string(u));
    }
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw SchemaError("malformed decimal integer '" + j.get<std::string>() + "'");
        return x;
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

namespace {

Json partition_list(const std::vector<Partition>& order)
{
    Json out = Json::array();
    for (const auto& p : order)
        out.push_back(p.to_string());
    return out;
}

void expect_header(const Json& j, std::string_view kind)
{
    if (!j.is_object())
        throw SchemaError("document is not a JSON object");
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw SchemaError("schema version mismatch");
    if (j.value("kind", std::string{}) != kind)
        throw SchemaError("expected kind '" + std::string(kind) + "'");
}

int expect_n(const Json& j)
{
    const int n = j.at("n").get<int>();
    if (n < 1)
        throw SchemaError("n must be positive");
    if (j.at("partitions") != partition_list(partitions_of(n)))
        throw SchemaError("partition order does not match the canonical order");
    return n;
}

Json entry_json(const DEntry& e)
{
    return Json{{"nu", e.nu.to_string()}, {"i", e.degree}, {"d", integer_to_json(e.d)}};
}

Json low_degree_json(const LowDegreeEntry& e)
{
    return Json{{"n", e.n},
                {"m", e.m},
                {"side", e.codegree ? "co-degree" : "degree"},
                {"nu", e.nu.to_string()},
                {"i", e.degree},
                {"d", integer_to_json(e.d)}};
}

const char* status(bool pass) { return pass ? "pass" : "fail"; }

} // namespace

Json to_json(const CharacterTable& table)
{
    Json values = Json::array();
    for (std::size_t r = 0; r < table.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < table.size(); ++c)
            row.push_back(integer_to_json(table.value(r, c)));
        values.push_back(std::move(row));
    }
    Json sizes = Json::array();
    for (const auto& s : table.class_sizes())
        sizes.push_back(integer_to_json(s));
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "char"},
                {"n", table.n()},
                {"partitions", partition_list(table.partitions())},
                {"class_sizes", std::move(sizes)},
                {"values", std::move(values)}};
}

Json to_json(const GradedMultiplicityTable& table)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < table.size(); ++r) {
        Json row = Json::array();
        for (const auto& b : table.row(r))
            row.push_back(integer_to_json(b));
        rows.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "graded"},
                {"n", table.n()},
                {"top_degree", table.top_degree()},
                {"partitions", partition_list(table.partitions())},
                {"b", std::move(rows)}};
}

Json to_json(const KroneckerTable& table)
{
    Json triples = Json::array();
    const std::size_t p = table.size();
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a; b < p; ++b)
            for (std::size_t c = b; c < p; ++c)
                if (const Integer& g = table.at(a, b, c); g != 0)
                    triples.push_back(Json::array({a, b, c, integer_to_json(g)}));
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "kron"},
                {"n", table.n()},
                {"partitions", partition_list(table.partitions())},
                {"triples", std::move(triples)}};
}

CharacterTable character_table_from_json(const Json& j)
{
    expect_header(j, "char");
    const int n = expect_n(j);
    const std::size_t p = j.at("partitions").size();
    const Json& rows = j.at("values");
    if (rows.size() != p)
        throw SchemaError("character table has the wrong number of rows");
    std::vector<Integer> values;
    values.reserve(p * p);
    for (const auto& row : rows) {
        if (row.size() != p)
            throw SchemaError("character table row has the wrong length");
        for (const auto& v : row)
            values.push_back(integer_from_json(v));
    }
    CharacterTable table(n, std::move(values));
    const Json& sizes = j.at("class_sizes");
    if (sizes.size() != p)
        throw SchemaError("class size list has the wrong length");
    for (std::size_t k = 0; k < p; ++k)
        if (integer_from_json(sizes[k]) != table.class_sizes()[k])
            throw SchemaError("class size mismatch");
    return table;
}

GradedMultiplicityTable graded_table_from_json(const Json& j)
{
    expect_header(j, "graded");
    const int n = expect_n(j);
    const int top = j.at("top_degree").get<int>();
    if (top != top_degree_of(n))
        throw SchemaError("graded table has the wrong top degree");
    GradedMultiplicityTable table(n, top);
    const Json& rows = j.at("b");
    if (rows.size() != table.size())
        throw SchemaError("graded table has the wrong number of rows");
    for (std::size_t r = 0; r < table.size(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(top) + 1)
            throw SchemaError("graded table row has the wrong length");
        for (int i = 0; i <= top; ++i)
            table.set(r, i, integer_from_json(rows[r][i]));
    }
    return table;
}

KroneckerTable kronecker_table_from_json(const Json& j)
{
    expect_header(j, "kron");
    const int n = expect_n(j);
    KroneckerTable table(n);
    for (const auto& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 4)
            throw SchemaError("Kronecker triple must have four fields");
        const auto a = t[0].get<std::size_t>();
        const auto b = t[1].get<std::size_t>();
        const auto c = t[2].get<std::size_t>();
        if (!(a <= b && b <= c && c < table.size()))
            throw SchemaError("Kronecker triple indices out of order or range");
        table.set(a, b, c, integer_from_json(t[3]));
    }
    return table;
}

Json report_payload(const LogConcavityReport& report)
{
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back(entry_json(e));
    Json violations = Json::array();
    for (const auto& e : report.violations)
        violations.push_back(entry_json(e));
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "flag-lc"},
                {"n", report.n},
                {"top_degree", report.top_degree},
                {"degrees", report.degrees},
                {"min_d", report.min_d ? integer_to_json(*report.min_d) : Json(nullptr)},
                {"entries", std::move(entries)},
                {"violations", std::move(violations)},
                {"status", status(report.pass())}};
}

Json report_payload(const UnimodalityReport& report)
{
    Json entries = Json::array();
    Json sequences = Json::array();
    for (const auto& seq : report.sequences) {
        for (std::size_t k = 0; k < seq.values.size(); ++k)
            entries.push_back(Json{{"nu", seq.nu.to_string()},
                                   {"i", static_cast<int>(k) + 1},
                                   {"d", integer_to_json(seq.values[k])}});
        sequences.push_back(Json{{"nu", seq.nu.to_string()},
                                 {"symmetric", seq.symmetric},
                                 {"unimodal", seq.unimodal}});
    }
    Json violations = Json::array();
    for (const auto& nu : report.symmetry_failures)
        violations.push_back(Json{{"nu", nu.to_string()}, {"reason", "not-symmetric"}});
    for (const auto& nu : report.failures)
        violations.push_back(Json{{"nu", nu.to_string()}, {"reason", "not-unimodal"}});
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "unimodal"},
                {"n", report.n},
                {"top_degree", report.top_degree},
                {"entries", std::move(entries)},
                {"sequences", std::move(sequences)},
                {"violations", std::move(violations)},
                {"status", status(report.pass())}};
}

Json report_payload(const LowDegreeReport& report)
{
    Json entries = Json::array();
    for (const auto& e : report.entries)
        entries.push_back(low_degree_json(e));
    Json violations = Json::array();
    for (const auto& e : report.violations)
        violations.push_back(low_degree_json(e));
    Json mismatches = Json::array();
    for (const auto& e : report.duality_mismatches)
        mismatches.push_back(low_degree_json(e));
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "low-degree"},
                {"n_max", report.n_max},
                {"m_max", kLowDegreeMax},
                {"entries", std::move(entries)},
                {"violations", std::move(violations)},
                {"duality_mismatches", std::move(mismatches)},
                {"status", status(report.pass())}};
}

Json springer_payload(const std::vector<SpringerCounterexample>& found, int n_max)
{
    Json list = Json::array();
    for (const auto& c : found) {
        Json witnesses = Json::array();
        for (const auto& w : c.witnesses)
            witnesses.push_back(entry_json(w));
        list.push_back(Json{{"n", c.mu.size()}, {"mu", c.mu.to_string()}, {"witnesses", std::move(witnesses)}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "springer-scan"},
                {"n_range", Json::array({1, n_max})},
                {"counterexamples", std::move(list)},
                {"status", status(found.empty())}};
}

Json ReportDocument::to_json() const
{
    return Json{{"schema_version", schema_version},
                {"command", command},
                {"parameters", parameters},
                {"provenance", provenance},
                {"payload", payload}};
}

std::string ReportDocument::serialize() const
{
    return to_json().dump(2) + "\n";
}

ReportDocument ReportDocument::parse(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("schema_version", -1) != kSchemaVersion)
        throw SchemaError("report schema version mismatch");
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.provenance = j.at("provenance");
    doc.payload = j.at("payload");
    return doc;
}

} // namespace coinv
