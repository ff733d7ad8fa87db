// Acceptance gate: runs every verification obligation on its full grid and
// prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <rmbispec/verify.hpp>

using namespace rmb;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, bool ok,
               const std::vector<std::string>& notes = {}) {
    std::printf("criterion %02d (%s): %s\n", id, name.c_str(), ok ? "PASS" : "FAIL");
    if (!ok) {
        ++failures;
        for (const std::string& n : notes) std::printf("    %s\n", n.c_str());
    }
}

bool suite_ok(const CheckReport& r, const std::string& want_status) {
    return r.status == want_status && r.witnesses.empty();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

int main(int, char** argv) {
    SuiteConfig cfg; // defaults: q = 2/7, t = 3/5, full grids

    {
        CheckReport r = verify_eigen(cfg);
        criterion(1, "eigenfunction equations", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        Params<Rational> pr{cfg.q, cfg.t};
        Series<Rational> psi2 = psi_series(2, pr, 6, 6);
        Series<Rational> psi3 = psi_series(3, pr, 4, 4);
        criterion(2, "bispectral duality",
                  psi2.swap_blocks() == psi2 && psi3.swap_blocks() == psi3);
    }
    {
        CheckReport r = verify_tqt(cfg);
        criterion(3, "t <-> q/t symmetry", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_poles(cfg);
        criterion(4, "pole confinement", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_recurrences(cfg);
        criterion(5, "rank-raising recurrences", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_macdonald(cfg);
        criterion(6, "Macdonald specialization bridge", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_wronski(cfg);
        criterion(7, "Wronski relations", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_principal(cfg);
        criterion(8, "principal specialization", suite_ok(r, "numeric-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_n3(cfg);
        criterion(9, "rank-3 closed forms", suite_ok(r, "numeric-pass"), r.witnesses);
    }
    {
        CheckReport r = verify_hypergeom(cfg);
        criterion(10, "hypergeometric transformations", suite_ok(r, "exact-pass"), r.witnesses);
    }
    {
        Params<Rational> pr{cfg.q, cfg.t};
        Series<Rational> psi3 = psi_series(3, pr, 5, 5);
        bool clean = false;
        Series<Rational> cut = psi3.restrict_front(2, &clean);
        criterion(11, "restriction to lower rank",
                  clean && cut == psi_series(2, pr, 5, 5));
    }
    {
        namespace fs = std::filesystem;
        fs::path cli = fs::path(argv[0]).parent_path() / "rmbispec";
        fs::path o1 = fs::temp_directory_path() / "rmbispec_det_1.json";
        fs::path o2 = fs::temp_directory_path() / "rmbispec_det_2.json";
        std::string base = "\"" + cli.string() + "\" verify --suite all --n 2 --deg-z 3"
                           " --deg-w 3 --shells 8 --seed 4242 --out ";
        bool ok = false;
        if (std::system((base + "\"" + o1.string() + "\"").c_str()) == 0
            && std::system((base + "\"" + o2.string() + "\"").c_str()) == 0) {
            std::string a = slurp(o1.string()), b = slurp(o2.string());
            ok = !a.empty() && a == b;
        }
        fs::remove(o1);
        fs::remove(o2);
        criterion(12, "deterministic reports", ok);
    }

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
