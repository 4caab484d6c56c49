#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

std::string binary_path() {
    const char* env = std::getenv("TREEDEG_BIN");
    return env ? env : "./tools/treedeg";
}

std::string schema_dir() {
    const char* env = std::getenv("TREEDEG_SCHEMAS");
    return env ? env : "../schemas";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json load_schema(const std::string& name) {
    std::ifstream in(schema_dir() + "/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

bool type_ok(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

// Checks the subset of json-schema the shipped files use: type (single or
// union), enum, required, properties, additionalProperties:false, items.
bool validates(const json& schema, const json& value) {
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& option : schema["enum"]) hit = hit || option == value;
        if (!hit) return false;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_ok(t.get<std::string>(), value);
        } else {
            for (const auto& alt : t) ok = ok || type_ok(alt.get<std::string>(), value);
        }
        if (!ok) return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        const json* props =
            schema.contains("properties") ? &schema["properties"] : nullptr;
        bool closed = schema.contains("additionalProperties") &&
                      schema["additionalProperties"].is_boolean() &&
                      !schema["additionalProperties"].get<bool>();
        for (const auto& [key, member] : value.items()) {
            if (props && props->contains(key)) {
                if (!validates((*props)[key], member)) return false;
            } else if (closed) {
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& element : value)
            if (!validates(schema["items"], element)) return false;
    return true;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/treedeg_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("decide reports the bipartite exception pair") {
    std::string k33 = write_temp("k33.g6", "EFz_\n");
    auto r = run("decide --tree tpq:1,2 --graph " + k33);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "exception_bipartite");
    CHECK(j["p"] == 1);
    CHECK(!j.contains("witness"));
    CHECK(validates(load_schema("verdict.schema.json"), j));

    auto swapped = run("decide --tree tpq:2,1 --graph " + k33);
    CHECK(json::parse(swapped.out)["status"] == "exception_bipartite");

    auto flagged = run("decide --tree tpq:1,2 --graph " + k33 + " --fail-on-negative");
    CHECK(flagged.exit_code == 1);
}

TEST_CASE("embed emits a witness and honors the schema") {
    auto r = run("embed --tree tpq:2,4 --graph HFzf~z{");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "embeddable");
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"].size() == 9);
    CHECK(validates(load_schema("verdict.schema.json"), j));

    auto exc = run("embed --tree tpq:1,5 --graph HFzf~z{");
    json e = json::parse(exc.out);
    CHECK(e["status"] == "exception_multipartite");
    CHECK(e["k"] == 2);
    CHECK(e["a"] == 3);
    CHECK(validates(load_schema("verdict.schema.json"), e));
}

TEST_CASE("out of scope verdicts can fall back to the oracle") {
    auto r = run("embed --tree EkG_ --graph D~{ --fallback-oracle");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "out_of_scope");
    CHECK(j["reason"] == "HostTooSmall");
    REQUIRE(j.contains("oracle"));
    CHECK(j["oracle"]["embeddable"] == false);
    CHECK(validates(load_schema("verdict.schema.json"), j));

    // Star tree: out of scope but the oracle embeds it into K_7.
    std::string star = write_temp("star5.parents", "6\n0\n0\n0\n0\n0\n");
    auto s = run("embed --tree " + star + " --graph F~~~w --fallback-oracle");
    json k = json::parse(s.out);
    CHECK(k["status"] == "out_of_scope");
    CHECK(k["reason"] == "MaxDegreeTooLarge");
    CHECK(k["oracle"]["embeddable"] == true);
    CHECK(validates(load_schema("verdict.schema.json"), k));
}

TEST_CASE("tree and graph inputs in every accepted format") {
    std::string parents = write_temp("t12.parents", "6\n0\n1\n0\n2\n2\n");
    std::string edges =
        write_temp("k33.edges", "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    auto r = run("decide --tree " + parents + " --graph " + edges);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["status"] == "exception_bipartite");
    CHECK(j["p"] == 1);

    auto inline_g6 = run("decide --tree EkG_ --graph EFz_");
    CHECK(json::parse(inline_g6.out)["status"] == "exception_bipartite");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run("embed --tree bad.g6 --graph EFz_").exit_code == 2);
    CHECK(run("embed --tree tpq:1,2").exit_code == 2);
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("selftest nosuchsuite").exit_code == 2);
    CHECK(run("enumerate-trees --n 25").exit_code == 2);
    CHECK(run("decide --tree tpq:0,3 --graph EFz_").exit_code == 2);
    CHECK(run("decide --tree Bw --graph EFz_").exit_code == 2);
    CHECK(run("ramsey exact --tree tpq:1,2 --m 3 --cap 20").exit_code == 2);
}

TEST_CASE("enumerations match their pinned catalogs") {
    auto trees = run("enumerate-trees --n 6 --max-degree 3");
    CHECK(trees.exit_code == 0);
    json t = json::parse(trees.out);
    CHECK(t["count"] == 4);
    CHECK(t["items"].size() == 4);
    CHECK(validates(load_schema("enumeration.schema.json"), t));

    auto graphs = run("enumerate-graphs --n 4 --min-degree 2 --connected");
    json g = json::parse(graphs.out);
    CHECK(g["count"] == 3);
    CHECK(g["items"] == json::array({"C]", "C^", "C~"}));
    CHECK(validates(load_schema("enumeration.schema.json"), g));
}

TEST_CASE("prediction output carries the side conditions") {
    auto r = run("ramsey predict --tree tpq:2,1 --m 3");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == 7);
    CHECK(j["rule"] == "single_leaf_exact");
    CHECK(j["side_conditions"]["tpq"]["p"] == 1);
    CHECK(j["side_conditions"]["divisor_parts_member"] == true);
    CHECK(validates(load_schema("prediction.schema.json"), j));

    auto oos = run("ramsey predict --tree 'C~' --m 3");
    CHECK(oos.exit_code == 2);

    auto plain = run("ramsey predict --tree EqGO --m 3");
    json p = json::parse(plain.out);
    CHECK(p["rule"] == "general_exact");
    CHECK(p["value"] == 6);
    CHECK(validates(load_schema("prediction.schema.json"), p));
}

TEST_CASE("exact sweep output carries witness and certificate") {
    auto r = run("ramsey exact --tree tpq:1,2 --m 3 --cap 10");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["found"] == true);
    CHECK(j["value"] == 7);
    CHECK(j["lower_witness"]["n"] == 6);
    CHECK(j["lower_witness"]["red"] == "EFz_");
    CHECK(j["certificate"]["classes_checked"] == 29);
    CHECK(validates(load_schema("exact.schema.json"), j));

    auto capped = run("ramsey exact --tree tpq:1,2 --m 3 --cap 6");
    CHECK(capped.exit_code == 0);
    json c = json::parse(capped.out);
    CHECK(c["found"] == false);
    CHECK(!c.contains("value"));
    CHECK(validates(load_schema("exact.schema.json"), c));

    auto flagged =
        run("ramsey exact --tree tpq:1,2 --m 3 --cap 6 --fail-on-negative");
    CHECK(flagged.exit_code == 1);
}

TEST_CASE("campaign emits one validating row per tree") {
    auto r = run("ramsey campaign --n 6 --k 0");
    CHECK(r.exit_code == 0);
    json schema = load_schema("campaign-row.schema.json");
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0, stepped = 0;
    while (std::getline(lines, line)) {
        json row = json::parse(line);
        CHECK(validates(schema, row));
        CHECK(row["lower_witness_valid"] == true);
        CHECK(row["exact"] == row["predicted"]);
        if (row["predicted"] == 7) ++stepped;
        ++rows;
    }
    CHECK(rows == 4);
    CHECK(stepped == 1);

    std::string out_path = "/tmp/treedeg_cli_rows.jsonl";
    std::remove(out_path.c_str());
    auto piped = run("ramsey campaign --n 6 --k 0 --out " + out_path);
    CHECK(piped.exit_code == 0);
    CHECK(piped.out.empty());
    std::ifstream written(out_path);
    REQUIRE(written.good());
    std::stringstream sink;
    sink << written.rdbuf();
    CHECK(sink.str() == r.out);
}

TEST_CASE("selftest runs its suites and reports json") {
    auto r = run("selftest fact1");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["suites"].size() == 1);
    CHECK(j["suites"][0]["name"] == "m_family_equivalence");
    CHECK(validates(load_schema("selftest.schema.json"), j));

    auto multi = run("selftest exception_instances desk_tables");
    json m = json::parse(multi.out);
    CHECK(m["suites"].size() == 2);
    CHECK(m["pass"] == true);
    CHECK(validates(load_schema("selftest.schema.json"), m));
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string cmds[] = {
        "enumerate-graphs --n 5 --min-degree 2 --connected",
        "ramsey predict --tree tpq:1,2 --m 3",
        "selftest path_lemmas --seed 99",
        "embed --tree tpq:2,4 --graph HFzf~z{",
    };
    for (const std::string& cmd : cmds) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}
