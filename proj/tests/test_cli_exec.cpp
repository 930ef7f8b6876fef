// End-to-end checks of the installed binary: exit codes, artifact files and
// byte-identical CSV across runs. The binary path arrives via UNEQ_BIN.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string binary_path() {
    const char* p = std::getenv("UNEQ_BIN");
    REQUIRE_MESSAGE(p != nullptr, "UNEQ_BIN must point at the CLI binary");
    return p;
}

int run(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path write_config(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "uneq_cli_exec";
    fs::create_directories(dir);
    const fs::path file = dir / name;
    std::ofstream(file) << body;
    return file;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kSweepConfig = R"(
game = cournot
analysis = equilibrium
theta1 = 0.2
theta2 = 0.2
alpha1 = 0.1
beta1 = 0.3
alpha2 = 0.1
beta2 = 0.3
pi1 = sweep(0, 1, 5)
pi2 = sweep(0, 1, 5)
)";

}  // namespace

TEST_CASE("successful run writes report and csv") {
    const fs::path cfg = write_config("sweep.ini", kSweepConfig);
    const fs::path out = cfg.parent_path() / "out_a";
    CHECK(run("--config " + cfg.string() + " --out " + out.string()) == 0);
    CHECK(fs::exists(out / "report.txt"));
    CHECK(fs::exists(out / "results.csv"));

    const std::string csv = slurp(out / "results.csv");
    CHECK(csv.rfind("game,theta1,", 0) == 0);
    // header plus 25 sweep rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 26);

    const fs::path out2 = cfg.parent_path() / "out_b";
    CHECK(run("--config " + cfg.string() + " --out " + out2.string()) == 0);
    CHECK(slurp(out / "results.csv") == slurp(out2 / "results.csv"));
}

TEST_CASE("usage and config errors exit 1") {
    CHECK(run("") == 1);
    CHECK(run("--config /nonexistent/file.ini") == 1);

    const fs::path bad = write_config(
        "bad.ini", "game = cournot\ntheta1 = 0.9\nbeta1 = 0.3\nalpha1 = 0.1\n");
    CHECK(run("--config " + bad.string()) == 1);

    const fs::path ok = write_config("overrides.ini", kSweepConfig);
    CHECK(run("--config " + ok.string() + " --tolerance -3") == 1);
    CHECK(run("--config " + ok.string() + " --resolution 1") == 1);
}

TEST_CASE("non-convergence exits 2 unless allowed") {
    std::string text = kSweepConfig;
    text += "max_iter = 2\n";
    const fs::path cfg = write_config("stall.ini", text);
    const fs::path out = cfg.parent_path() / "out_stall";
    CHECK(run("--config " + cfg.string() + " --out " + out.string()) == 2);
    CHECK(run("--config " + cfg.string() + " --out " + out.string() +
              " --allow-nonconverged") == 0);
}

TEST_CASE("verification failure exits 3") {
    const fs::path cfg = write_config("verify.ini", kSweepConfig);
    const fs::path out = cfg.parent_path() / "out_verify";
    CHECK(run("--config " + cfg.string() + " --out " + out.string() +
              " --analysis verify --inject-fault cournot-center") == 3);
}
