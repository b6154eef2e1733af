#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>

#include "sparsehalf/cli.hpp"
#include "sparsehalf/generators.hpp"
#include "sparsehalf/halves.hpp"
#include "sparsehalf/io.hpp"
#include "test_util.hpp"

using namespace sparsehalf;
using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp_graph(const Graph& g, const std::string& name) {
    const std::string path = "/tmp/sparsehalf_test_" + name + ".el";
    std::ostringstream buffer;
    write_edge_list(buffer, g);
    std::ofstream file(path);
    file << buffer.str();
    return path;
}

}  // namespace

TEST_CASE("edge list round trip") {
    const Graph g = make_petersen();
    std::stringstream buffer;
    write_edge_list(buffer, g);
    CHECK(read_edge_list(buffer) == g);

    std::istringstream with_comments("# petersen\n10 2\n# edges\n0 1\n1 2\n");
    const Graph small = read_edge_list(with_comments);
    CHECK(small.vertex_count() == 10);
    CHECK(small.edge_count() == 2);

    std::istringstream bad("3 1\n2 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("weight and half file round trip") {
    auto c5 = std::make_shared<const Graph>(make_c5());
    std::vector<Rat> w{Rat(1, 4), Rat(1, 4), Rat(1, 6), Rat(1, 6), Rat(1, 6)};
    std::stringstream buffer;
    write_vertex_rationals(buffer, w);
    CHECK(read_vertex_rationals(buffer, 5) == w);
}

TEST_CASE("distribution file round trip") {
    auto c5 = std::make_shared<const Graph>(make_c5());
    const WeightFunction uniform = WeightFunction::uniform(c5);
    const auto dist = c5_uniform_distribution(uniform);
    std::stringstream buffer;
    write_distribution(buffer, dist);
    const auto back = read_distribution(buffer, uniform);
    REQUIRE(back.halves().size() == dist.halves().size());
    for (std::size_t i = 0; i < dist.halves().size(); ++i) {
        CHECK(back.halves()[i].first.values() == dist.halves()[i].first.values());
        CHECK(back.halves()[i].second == dist.halves()[i].second);
    }
}

TEST_CASE("homomorphism file round trip") {
    auto b = blowup(make_c5(), {2, 2, 2, 2, 2});
    auto g = std::make_shared<const Graph>(b.graph);
    auto c5 = std::make_shared<const Graph>(make_c5());
    std::vector<int> map(10);
    for (int i = 0; i < 5; ++i)
        for (int v : b.partition.blocks[i]) map[v] = i;
    const Homomorphism phi(g, c5, map);
    std::stringstream buffer;
    write_homomorphism(buffer, phi);
    const Homomorphism back = read_homomorphism(buffer, g, c5);
    CHECK(back.map() == phi.map());
}

TEST_CASE("generator names") {
    CHECK(graph_from_generator_name("petersen") == make_petersen());
    CHECK(graph_from_generator_name("fd:5") == make_fd(5));
    CHECK(graph_from_generator_name("c5") == make_c5());
    CHECK(graph_from_generator_name("pstar").vertex_count() == 15);
    CHECK(graph_from_generator_name("blowup:c5:2,2,2,2,2").vertex_count() == 10);
    CHECK(graph_from_generator_name("blowup:fd:3:1,1,1,1,1,1,1,2").vertex_count() == 9);
    CHECK_THROWS_AS(graph_from_generator_name("mystery"), std::invalid_argument);
}

TEST_CASE("cli gen") {
    const auto result = run({"gen", "fd:5"});
    CHECK(result.code == 0);
    CHECK(result.out.substr(0, 5) == "14 35");
    CHECK(run({"gen", "fd:0"}).code == 64);
    CHECK(run({"nosuchcommand"}).code == 64);
}

TEST_CASE("cli check emits the requested JSON") {
    const std::string path = write_temp_graph(make_petersen(), "check");
    const auto result = run({"check", "--triangle-free", path});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["triangle_free"] == true);
}

TEST_CASE("cli oracle reports tightness") {
    const std::string path = write_temp_graph(make_petersen(), "oracle");
    const auto result = run({"oracle", path});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["min_edges"] == 2);
    CHECK(doc["bound"] == "2");
    CHECK(doc["tight"] == true);
}

TEST_CASE("cli find-half both methods agree on the blowup") {
    const std::string path =
        write_temp_graph(blowup(make_c5(), {4, 4, 4, 4, 4}).graph, "findhalf");
    const auto result = run({"find-half", "--method", "both", path});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["agree"] == true);
    CHECK(doc["oracle"]["min_edges"] == 8);
    CHECK(doc["pipeline"]["within_bound"] == true);
}

TEST_CASE("cli find-half reports hypothesis violations") {
    const std::string path = write_temp_graph(testutil::cycle(8), "lowdeg");
    const auto result = run({"find-half", "--method", "pipeline", path});
    CHECK(result.code == 1);
    const json doc = json::parse(result.out);
    CHECK(doc["error"]["kind"] == "hypothesis-violation");
}

TEST_CASE("cli approx on an exact blowup") {
    const std::string path =
        write_temp_graph(blowup(make_c5(), {3, 3, 3, 3, 3}).graph, "approx");
    const auto result = run({"approx", "--template", "c5", path});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["eps_achieved"] == "0");
    CHECK(doc["diff_edges"] == 0);
}

TEST_CASE("cli classify") {
    const std::string path =
        write_temp_graph(blowup(make_c5(), {4, 4, 4, 4, 4}).graph, "classify");
    const auto result = run({"classify", path, "--eps", "1/50"});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["outcome"] == "i");
    CHECK(doc["eps_achieved"] == "0");
}

TEST_CASE("cli verify-lemma is reproducible") {
    const auto a = run({"verify-lemma", "8cycle", "--budget", "300", "--seed", "5"});
    const auto b = run({"verify-lemma", "8cycle", "--budget", "300", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json doc = json::parse(a.out);
    CHECK(doc["violated"] == false);
    CHECK(run({"verify-lemma", "8cycle", "--budget", "10"}).code == 64);  // seed required
}

TEST_CASE("cli pipeline-test") {
    const auto result = run({"pipeline-test", "--count", "6", "--seed", "11",
                             "--max-n", "20"});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["failures"] == 0);
    CHECK(doc["count"] == 6);
}
