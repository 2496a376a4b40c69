#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "schubert/schubert.hpp"
#include "schubert/trace_io.hpp"
#include "schubert/verify.hpp"

namespace fs = std::filesystem;
using namespace schubert;

namespace {

constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternalError = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_rect(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw UsageError("rectangle must look like KxM");
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

void write_file(const fs::path& p, const std::string& body) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream f(p);
    if (!f) throw UsageError("cannot write " + p.string());
    f << body;
}

std::string padded(std::size_t i) {
    std::string s = std::to_string(i);
    return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

std::string boundary_arg(const std::string& s, int n_hint) {
    if (!s.empty() && s.find_first_not_of("01") == std::string::npos && (n_hint < 0 || static_cast<int>(s.size()) == n_hint))
        return s;
    throw UsageError("boundary '" + s + "' must be a 0/1 string");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littlewood-Richardson and K-theory structure constants via checker games"};
    app.require_subcommand(1);

    int k = -1, n = -1, jobs = verify::default_jobs(), max_n = 6;
    std::string alpha, beta, gamma, rect, a_arg, b_arg, trace_file, render, out_dir, replay, suite, svg_dir;
    bool stable = false, ktheory = false;
    std::vector<std::string> classes;

    auto* lrc = app.add_subcommand("lrc", "expansion s_alpha*s_beta in G(k,n), or one coefficient");
    lrc->add_option("--k", k)->required();
    lrc->add_option("--n", n)->required();
    lrc->add_option("--alpha", alpha)->required();
    lrc->add_option("--beta", beta)->required();
    lrc->add_option("--gamma", gamma);

    auto* schur = app.add_subcommand("schur", "Schur product in a rectangle or stably");
    schur->add_option("--alpha", alpha)->required();
    schur->add_option("--beta", beta)->required();
    auto* rect_opt = schur->add_option("--rect", rect, "KxM: k rows, n-k columns");
    schur->add_flag("--stable", stable)->excludes(rect_opt);
    schur->add_flag("--ktheory", ktheory);

    auto* kth = app.add_subcommand("ktheory", "product of structure sheaves in K(G(k,n))");
    kth->add_option("--k", k)->required();
    kth->add_option("--n", n)->required();
    kth->add_option("--alpha", alpha)->required();
    kth->add_option("--beta", beta)->required();
    kth->add_option("--gamma", gamma);

    auto* games = app.add_subcommand("games", "enumerate checker games");
    games->add_option("--k", k);
    games->add_option("--n", n);
    games->add_option("--a", a_arg);
    games->add_option("--b", b_arg);
    games->add_flag("--ktheory", ktheory);
    games->add_option("--trace", trace_file, "write traces as JSON");
    games->add_option("--render", render)->check(CLI::IsMember({"ascii", "svg"}));
    games->add_option("--out", out_dir);
    games->add_option("--replay", replay, "re-validate a trace file");

    auto* puz = app.add_subcommand("puzzles", "enumerate puzzles with 0/1 boundaries");
    puz->add_option("--alpha", alpha)->required();
    puz->add_option("--beta", beta)->required();
    puz->add_option("--gamma", gamma);
    puz->add_flag("--ktheory", ktheory);
    puz->add_option("--svg", svg_dir);

    auto* tour = app.add_subcommand("tournament", "count checker tournaments");
    tour->add_option("--k", k)->required();
    tour->add_option("--n", n)->required();
    tour->add_option("--classes", classes)->required()->expected(1, -1);

    auto* ver = app.add_subcommand("verify", "exhaustive verification sweeps");
    std::vector<std::string> names = verify::suite_names();
    names.push_back("all");
    ver->add_option("--suite", suite)->required()->check(CLI::IsMember(names));
    ver->add_option("--max-n", max_n)->check(CLI::Range(0, 9));
    ver->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*lrc || *kth) {
            const Mode mode = *kth ? Mode::KTheory : Mode::Cohomology;
            const auto a = parse_partition(alpha), b = parse_partition(beta);
            const auto e = multiply_schur(a, b, k, n, mode);
            if (!gamma.empty()) {
                const auto g = parse_partition(gamma);
                if (!g.fits(k, n - k)) throw OutOfRectangle("gamma does not fit the rectangle");
                std::cout << e.coefficient(g) << "\n";
            } else {
                std::cout << to_string(e) << "\n";
            }
        } else if (*schur) {
            const auto a = parse_partition(alpha), b = parse_partition(beta);
            if (rect.empty()) {
                if (ktheory) throw UsageError("--ktheory needs --rect");
                std::cout << to_string(multiply_schur_stable(a, b)) << "\n";
            } else {
                const auto [rk, rw] = parse_rect(rect);
                std::cout << to_string(multiply_schur(a, b, rk, rk + rw, ktheory ? Mode::KTheory : Mode::Cohomology))
                          << "\n";
            }
        } else if (*games) {
            if (!replay.empty()) {
                std::ifstream f(replay);
                if (!f) throw UsageError("cannot read " + replay);
                const auto rep = replay_document(json::parse(f));
                std::cout << rep.games << " games replayed, " << rep.mismatches << " mismatches\n";
                if (!rep.first_error.empty()) std::cerr << rep.first_error << "\n";
                return rep.mismatches ? kVerifyFailed : 0;
            }
            if (k < 0 || n < 0 || (k > 0 && (a_arg.empty() || b_arg.empty())))
                throw UsageError("games needs --k --n --a --b (or --replay)");
            const auto A = parse_subset(a_arg), B = parse_subset(b_arg);
            const Mode mode = ktheory ? Mode::KTheory : Mode::Cohomology;
            const auto all = play_all_games(A, B, k, n, mode);
            Expansion e{k, n, {}};
            for (std::size_t i = 0; i < all.size(); ++i) {
                const auto& g = all[i];
                e.add(g.output, g.sign);
                std::cout << "game " << i + 1 << ": " << to_string(g.output) << (g.sign < 0 ? " sign -1" : "");
                if (mode == Mode::Cohomology) std::cout << " tableau " << to_string(game_to_tableau(g.trace));
                else std::cout << " tableau " << to_string(game_to_set_valued_tableau(g.trace));
                std::cout << "\n";
            }
            std::cout << all.size() << " games; " << to_string(relabel(e, mode)) << "\n";
            if (!trace_file.empty()) write_file(trace_file, games_to_json(all, A, B, n, mode).dump(1) + "\n");
            if (!render.empty()) {
                for (std::size_t i = 0; i < all.size(); ++i) {
                    if (render == "ascii" && out_dir.empty()) {
                        std::cout << "\n" << ascii_game(all[i]);
                        continue;
                    }
                    if (out_dir.empty()) throw UsageError("--render svg needs --out DIR");
                    const auto body = render == "ascii" ? ascii_game(all[i]) : svg_game(all[i]);
                    write_file(fs::path(out_dir) / ("game_" + padded(i + 1) + (render == "ascii" ? ".txt" : ".svg")),
                               body);
                }
            }
        } else if (*puz) {
            const std::string al = boundary_arg(alpha, -1);
            const std::string be = boundary_arg(beta, static_cast<int>(al.size()));
            const Mode mode = ktheory ? Mode::KTheory : Mode::Cohomology;
            std::vector<std::string> gammas;
            if (!gamma.empty()) {
                gammas.push_back(boundary_arg(gamma, static_cast<int>(al.size())));
            } else {
                const int ones = static_cast<int>(std::count(al.begin(), al.end(), '1'));
                for (const auto& s : subsets_of_size(ones, static_cast<int>(al.size())))
                    gammas.push_back(subset_to_boundary(s, static_cast<int>(al.size())));
            }
            std::size_t file = 0;
            for (const auto& g : gammas) {
                const auto r = enumerate_puzzles(al, be, g, mode, true);
                if (r.count == 0 && gamma.empty()) continue;
                std::cout << g << ": " << r.count << " puzzles";
                if (mode == Mode::KTheory) std::cout << ", signed " << r.signed_count;
                std::cout << "\n";
                if (!svg_dir.empty())
                    for (const auto& p : r.puzzles)
                        write_file(fs::path(svg_dir) / ("puzzle_" + padded(++file) + "_" + g + ".svg"), puzzle_svg(p));
            }
        } else if (*tour) {
            std::vector<Partition> cls;
            for (const auto& c : classes) cls.push_back(parse_partition(c));
            std::cout << tournament(cls, k, n) << "\n";
        } else if (*ver) {
            std::vector<std::string> run = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            for (const auto& s : run) {
                const auto r = verify::run_suite(s, max_n, jobs);
                std::cout << r.name << ": " << r.checked << " checks, " << r.violations << " violations ("
                          << r.seconds << " s)\n";
                for (const auto& m : r.samples) std::cout << "  " << m << "\n";
                ok = ok && r.ok();
            }
            return ok ? 0 : kVerifyFailed;
        }
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInternalError;
    } catch (const CountOverflow& e) {
        std::cerr << e.what() << "\n";
        return kInternalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: bad trace file: " << e.what() << "\n";
        return kUsage;
    }
    return 0;
}
