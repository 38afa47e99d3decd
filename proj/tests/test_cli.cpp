#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result call(std::vector<std::string> args, const std::string &stdin_text = "") {
	std::istringstream in(stdin_text);
	std::ostringstream out, err;
	int code = domcrit::cli::run(args, in, out, err);
	return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
	return (std::filesystem::temp_directory_path() / ("domcrit_test_" + name)).string();
}

std::string slurp(const std::string &path) {
	std::ifstream f(path, std::ios::binary);
	return {std::istreambuf_iterator<char>(f), {}};
}

} // namespace

TEST_CASE("analyze") {
	auto r = call({"analyze", "-"}, "Cr\n");
	REQUIRE(r.code == 0);
	auto j = json::parse(r.out);
	CHECK(j["gamma"] == 2);
	CHECK(j["critical"] == true);
	CHECK(j["fk"]["k"] == 2);
	CHECK(j["fk"]["m"] == json::array({2}));
	CHECK(j["gamma_set_count"] == 6);

	r = call({"analyze", "-", "--format", "edgelist"}, "n 3\n0 1\n1 2\n");
	REQUIRE(r.code == 0);
	j = json::parse(r.out);
	CHECK(j["gamma"] == 1);
	CHECK(j["classes"]["plus"] == json::array({1}));

	r = call({"analyze", "-", "--format", "edgelist"}, "n 5\n0 1\n2 3\n3 4\n");
	j = json::parse(r.out);
	CHECK(j["gamma"] == 2);
	CHECK(j["diameter"] == "infinite");
	REQUIRE(j["components"].size() == 2);
	CHECK(j["components"][0]["gamma"].get<int>() + j["components"][1]["gamma"].get<int>() == 2);

	r = call({"analyze", "-", "--budget", "1"}, "Cr\n");
	CHECK(json::parse(r.out)["gamma_set_count"] == "unknown");

	r = call({"analyze", "-"}, "Cr\nC~\n");
	CHECK(json::parse(r.out).is_array());
}

TEST_CASE("budget environment variable yields to the flag") {
	setenv("DOMCRIT_BUDGET", "1", 1);
	CHECK(json::parse(call({"analyze", "-"}, "Cr\n").out)["gamma_set_count"] == "unknown");
	CHECK(json::parse(call({"analyze", "-", "--budget", "100"}, "Cr\n").out)["gamma_set_count"] == 6);
	setenv("DOMCRIT_BUDGET", "lots", 1);
	CHECK(call({"analyze", "-"}, "Cr\n").code == domcrit::cli::exit_usage);
	unsetenv("DOMCRIT_BUDGET");
}

TEST_CASE("parse and usage errors exit with code 2") {
	CHECK(call({"analyze", "-"}, "C~~\n").code == 2);
	CHECK(call({"analyze", "/nonexistent/file"}).code == 2);
	CHECK(call({"frobnicate"}).code == 2);
	CHECK(call({}).code == 2);
	CHECK(call({"gen", "Fk"}).code == 2);
	CHECK(call({"gen", "Fk", "--m", "1,2"}).code == 2);
	CHECK(call({"verify", "--theorems", "Nope", "--n-max", "2"}).code == 2);
	CHECK(call({"--help"}).code == 0);
}

TEST_CASE("gen") {
	auto r = call({"gen", "Fk", "--k", "3", "--m", "2,2"});
	REQUIRE(r.code == 0);
	CHECK(r.out == "F]@IO\n");
	CHECK(r.out[0] - 63 == 7);

	r = call({"gen", "Fpp3", "--m1", "2", "--m2", "2", "--variant", "1"});
	REQUIRE(r.code == 0);
	CHECK(r.out[0] - 63 == 8);

	std::string path = temp_path("fstar4.g6");
	r = call({"gen", "Fstar", "--k", "4", "--max-order", "12", "--out", path});
	REQUIRE(r.code == 0);
	std::istringstream lines(slurp(path));
	std::set<std::string> seen;
	std::string line;
	int count = 0;
	while(std::getline(lines, line)) {
		seen.insert(line);
		++count;
	}
	CHECK(count > 0);
	CHECK(static_cast<int>(seen.size()) == count);
	auto sidecar = json::parse(slurp(path + ".json"));
	CHECK(sidecar["instances"].size() == static_cast<std::size_t>(count));
	CHECK(sidecar["instances"][0]["k"] == 4);
	std::remove(path.c_str());
	std::remove((path + ".json").c_str());

	r = call({"gen", "Fstar2", "--m", "1", "--variant", "p3"});
	CHECK(r.code == 0);
}

TEST_CASE("verify exit codes and report") {
	std::string path = temp_path("report.json");
	auto r = call({"verify", "--n-max", "5", "--random-pairs", "20", "--out", path, "--jobs", "2"});
	CHECK(r.code == 0);
	auto j = json::parse(slurp(path));
	CHECK(j["graphs_scanned"] == 52);
	CHECK(r.err.find("ThmA") != std::string::npos);

	r = call({"verify", "--n-max", "11"});
	CHECK(r.code == domcrit::cli::exit_budget);
	std::remove(path.c_str());

	std::string in = temp_path("graphs.g6");
	std::ofstream(in) << "Cr\nBw\n";
	r = call({"verify", "--source", "file", "--input", in, "--theorems", "ThmA,ThmE"});
	CHECK(r.code == 0);
	j = json::parse(r.out);
	CHECK(j["graphs_scanned"] == 2);
	CHECK(j["checks"].size() == 2);
	std::remove(in.c_str());
}

TEST_CASE("iso and convert") {
	std::string a = temp_path("a.g6"), b = temp_path("b.txt");
	std::ofstream(a) << "Cr\n";
	std::ofstream(b) << "n 4\n0 2\n2 1\n1 3\n3 0\n";
	auto r = call({"iso", a, b, "--format", "graph6"});
	CHECK(r.code == 2);
	auto c = call({"convert", b, "--from", "edgelist", "--to", "graph6"});
	REQUIRE(c.code == 0);
	std::string b6 = temp_path("b.g6");
	std::ofstream(b6) << c.out;
	r = call({"iso", a, b6});
	REQUIRE(r.code == 0);
	CHECK(json::parse(r.out)["isomorphic"] == true);
	CHECK(r.err == "yes\n");

	auto e = call({"convert", "-", "--to", "edgelist"}, "Cr\n");
	CHECK(e.out == "n 4\n0 1\n0 2\n1 3\n2 3\n");
	CHECK(call({"convert", "-", "--to", "edgelist"}, "Cr\nCr\n").code == 2);
	for(const auto &p : {a, b, b6})
		std::remove(p.c_str());
}
