#include "kummerlab/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kummerlab/bigraded_table.hpp"
#include "kummerlab/clifford.hpp"
#include "kummerlab/gs_decomposition.hpp"
#include "kummerlab/integer_matrix.hpp"
#include "kummerlab/mukai_lattice.hpp"
#include "kummerlab/partition.hpp"

namespace kummerlab {

namespace {

using nlohmann::json;

struct VerbOutput {
    json params;
    json result;
    std::string table;
    std::string csv;
};

std::string emit(const VerbOutput& v, const std::string& verb, const std::string& format)
{
    if (format == "json") {
        json envelope;
        envelope["verb"] = verb;
        envelope["params"] = v.params;
        envelope["result"] = v.result;
        return envelope.dump() + "\n";
    }
    return format == "csv" ? v.csv : v.table;
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t j = 0; j < row.size(); ++j) {
            if (width.size() <= j)
                width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += "  ";
            out += std::string(width[j] - row[j].size(), ' ');
            out += row[j];
        }
        out += "\n";
    }
    return out;
}

std::string join_profile(const std::vector<Integer>& profile)
{
    std::string s;
    for (size_t i = 0; i < profile.size(); ++i) {
        if (i)
            s += " ";
        s += profile[i].str();
    }
    return s;
}

VerbOutput betti_like_output(const BigradedTable& t, int top_degree, json params)
{
    const std::vector<Integer> profile = t.betti_profile(0, top_degree);
    VerbOutput out;
    out.params = std::move(params);
    out.table = join_profile(profile) + "\n";
    out.csv = "degree,dimension\n";
    json rows = json::array();
    for (int k = 0; k <= top_degree; ++k) {
        const Integer& b = profile[static_cast<size_t>(k)];
        if (b == 0)
            continue;
        out.csv += std::to_string(k) + "," + b.str() + "\n";
        rows.push_back(json::array({k, b.str()}));
    }
    out.result["betti"] = std::move(rows);
    return out;
}

VerbOutput hodge_output(const BigradedTable& t, int complex_dim, json params)
{
    VerbOutput out;
    out.params = std::move(params);

    /* entries ordered by (p,q) for the flat formats */
    std::vector<std::pair<std::pair<int, int>, Integer>> entries;
    for (const auto& [pos, d] : t.entries())
        entries.push_back({{pos.p, pos.q}, d});
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    out.csv = "p,q,dimension\n";
    json rows = json::array();
    for (const auto& [pq, d] : entries) {
        out.csv += std::to_string(pq.first) + "," + std::to_string(pq.second) + "," + d.str() +
                   "\n";
        rows.push_back(json::array({pq.first, pq.second, d.str()}));
    }
    out.result["hodge"] = std::move(rows);

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"p\\q"};
    for (int q = 0; q <= complex_dim; ++q)
        header.push_back(std::to_string(q));
    grid.push_back(std::move(header));
    for (int p = 0; p <= complex_dim; ++p) {
        std::vector<std::string> row{std::to_string(p)};
        for (int q = 0; q <= complex_dim; ++q) {
            const Integer d = t.dim(p, q);
            row.push_back(d == 0 ? "." : d.str());
        }
        grid.push_back(std::move(row));
    }
    out.table = render_grid(grid);
    return out;
}

VerbOutput decompose_output(long n)
{
    VerbOutput out;
    out.params["n"] = n;
    std::vector<std::vector<std::string>> grid{
        {"index", "partition", "d", "copies", "offset", "betti"}};
    out.csv = "index,parts,d,copies,offset,betti\n";
    json rows = json::array();
    int index = 0;
    for (const GSSummand& s : gs_summands(n)) {
        const std::vector<Integer> profile =
            s.base_table.betti_profile(0, s.base_table.max_total_degree());
        std::string parts;
        json parts_json = json::array();
        for (int part : s.partition.parts()) {
            if (!parts.empty())
                parts += "+";
            parts += std::to_string(part);
            parts_json.push_back(part);
        }
        grid.push_back({std::to_string(index), parts, std::to_string(s.d), s.copies.str(),
                        std::to_string(s.degree_offset), join_profile(profile)});
        out.csv += std::to_string(index) + "," + parts + "," + std::to_string(s.d) + "," +
                   s.copies.str() + "," + std::to_string(s.degree_offset) + "," +
                   join_profile(profile) + "\n";
        json row;
        row["parts"] = std::move(parts_json);
        row["d"] = s.d;
        row["copies"] = s.copies.str();
        row["offset"] = s.degree_offset;
        json betti = json::array();
        for (const Integer& b : profile)
            betti.push_back(b.str());
        row["betti"] = std::move(betti);
        rows.push_back(std::move(row));
        ++index;
    }
    out.table = render_grid(grid);
    out.result["summands"] = std::move(rows);
    return out;
}

VerbOutput profile_output(const std::map<int, Integer>& profile, json params)
{
    VerbOutput out;
    out.params = std::move(params);
    out.csv = "degree,dimension\n";
    json rows = json::array();
    for (const auto& [k, d] : profile) {
        out.table += std::to_string(k) + " " + d.str() + "\n";
        out.csv += std::to_string(k) + "," + d.str() + "\n";
        rows.push_back(json::array({k, d.str()}));
    }
    out.result["profile"] = std::move(rows);
    return out;
}

VerbOutput lsc_output(const LscReport& r)
{
    VerbOutput out;
    out.params["n"] = r.n;
    out.table = "n " + std::to_string(r.n) + "\nj " + std::to_string(r.j) + "\nbound " +
                std::to_string(r.bound) + "\nproven_degrees_max " +
                std::to_string(r.bound - 1) + "\nmin_noninvariant_degree " +
                std::to_string(r.min_noninvariant_degree) + "\nfull_lsc " +
                (r.full_lsc ? "true" : "false") + "\n";
    out.csv =
        "n,j,bound,proven_degrees_max,min_noninvariant_degree,full_lsc,middle_noninvariant_dim\n";
    out.csv += std::to_string(r.n) + "," + std::to_string(r.j) + "," + std::to_string(r.bound) +
               "," + std::to_string(r.bound - 1) + "," +
               std::to_string(r.min_noninvariant_degree) + "," +
               (r.full_lsc ? "true" : "false") + ",";
    out.result["n"] = r.n;
    out.result["j"] = r.j;
    out.result["bound"] = r.bound;
    out.result["proven_degrees_max"] = r.bound - 1;
    out.result["min_noninvariant_degree"] = r.min_noninvariant_degree;
    out.result["full_lsc"] = r.full_lsc;
    if (r.middle_noninvariant_dim) {
        out.table += "middle_noninvariant_dim " + r.middle_noninvariant_dim->str() + "\n";
        out.csv += r.middle_noninvariant_dim->str();
        out.result["middle_noninvariant_dim"] = r.middle_noninvariant_dim->str();
    }
    out.csv += "\n";
    return out;
}

json vector_json(const MukaiVector& v)
{
    json arr = json::array();
    arr.push_back(v.r.str());
    for (const auto& c : v.c1)
        arr.push_back(c.str());
    arr.push_back(v.s.str());
    return arr;
}

std::string divisors_line(const std::vector<Integer>& divisors)
{
    std::string s;
    for (size_t i = 0; i < divisors.size(); ++i) {
        if (i)
            s += " ";
        s += divisors[i].str();
    }
    return s;
}

VerbOutput divisors_output(const std::vector<Integer>& divisors, json params)
{
    VerbOutput out;
    out.params = std::move(params);
    out.table = divisors_line(divisors) + "\n";
    out.csv = "index,divisor\n";
    json arr = json::array();
    for (size_t i = 0; i < divisors.size(); ++i) {
        out.csv += std::to_string(i) + "," + divisors[i].str() + "\n";
        arr.push_back(divisors[i].str());
    }
    out.result["divisors"] = std::move(arr);
    return out;
}

IntegerMatrix parse_matrix_arg(const std::string& text)
{
    std::vector<std::vector<Integer>> rows;
    std::istringstream in(text);
    std::string row_text;
    while (std::getline(in, row_text, ';')) {
        std::vector<Integer> row;
        std::istringstream row_in(row_text);
        std::string token;
        while (std::getline(row_in, token, ',')) {
            try {
                row.emplace_back(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad integer '" + token + "'");
            }
        }
        if (row.empty())
            throw std::invalid_argument("empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("empty matrix");
    const size_t cols = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != cols)
            throw std::invalid_argument("rows of unequal length");
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

long draw(std::mt19937_64& gen, long lo, long hi)
{
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args)
{
    CLI::App app{"Betti and Hodge tables of generalized Kummer varieties, the partition\n"
                 "decomposition behind them, and the Mukai/Clifford lattice computations."};
    app.name("kummerlab");
    app.require_subcommand(1);

    long n = 0;
    long m = 1;
    bool invariant = false;
    bool full_chain = false;
    std::string format = "table";
    long max_n = 64;
    int threads = 1;
    std::string x_text, y_text, v_text, matrix_text;
    int trials = 100;
    unsigned long long seed = 12345;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
    };
    const auto add_guards = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", max_n, "Refuse computations past this n")
            ->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads (0 = hardware)")
            ->envname("KUMMERLAB_THREADS")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* betti = app.add_subcommand("betti", "Betti numbers of Kum_n");
    betti->add_option("--n", n, "half the complex dimension")->required()
        ->check(CLI::NonNegativeNumber);
    betti->add_flag("--invariant", invariant, "translation-invariant part only");
    add_format(betti);
    add_guards(betti);

    CLI::App* hodge = app.add_subcommand("hodge", "Hodge numbers of Kum_n");
    hodge->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    hodge->add_flag("--invariant", invariant);
    add_format(hodge);
    add_guards(hodge);

    CLI::App* decompose =
        app.add_subcommand("decompose", "Partition summands of the product table");
    decompose->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    add_format(decompose);
    add_guards(decompose);

    CLI::App* gamma_profile =
        app.add_subcommand("gamma-profile", "Non-invariant Betti profile of Kum_n");
    gamma_profile->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_format(gamma_profile);
    add_guards(gamma_profile);

    CLI::App* lsc = app.add_subcommand("lsc", "Proven hard-Lefschetz degree range for Kum_n");
    lsc->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_format(lsc);
    add_guards(lsc);

    CLI::App* hilbert =
        app.add_subcommand("hilbert", "Betti numbers of the Hilbert scheme of m points");
    hilbert->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    add_format(hilbert);
    add_guards(hilbert);

    CLI::App* moduli = app.add_subcommand("moduli", "Betti numbers of the ambient moduli space");
    moduli->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_format(moduli);
    add_guards(moduli);

    CLI::App* mukai = app.add_subcommand("mukai", "Mukai lattice arithmetic");
    mukai->require_subcommand(1);
    CLI::App* mukai_pair = mukai->add_subcommand("pair", "Pairing of two vectors");
    mukai_pair->add_option("--x", x_text, "vector r,c1a,c1b,c1c,c1d,c1e,c1f,s")->required();
    mukai_pair->add_option("--y", y_text, "vector r,c1a,c1b,c1c,c1d,c1e,c1f,s")->required();
    add_format(mukai_pair);
    CLI::App* mukai_dual = mukai->add_subcommand("dual", "Dual vector");
    mukai_dual->add_option("--x", x_text)->required();
    add_format(mukai_dual);
    CLI::App* mukai_classify = mukai->add_subcommand("classify", "Primitivity and positivity");
    mukai_classify->add_option("--x", x_text)->required();
    add_format(mukai_classify);
    CLI::App* mukai_dim = mukai->add_subcommand("dim", "Dimension of the moduli space");
    mukai_dim->add_option("--x", x_text)->required();
    add_format(mukai_dim);

    CLI::App* clifford = app.add_subcommand("clifford", "Spin module and cokernel computations");
    clifford->require_subcommand(1);
    CLI::App* clifford_snf =
        clifford->add_subcommand("snf", "Smith normal form of an integer matrix");
    clifford_snf->add_option("--matrix", matrix_text, "rows 'a,b;c,d'")->required();
    add_format(clifford_snf);
    CLI::App* clifford_gamma =
        clifford->add_subcommand("gamma", "Elementary divisors of the deck group");
    clifford_gamma->add_option("--n", n, "use the ideal-sheaf vector of n+1 points")
        ->check(CLI::NonNegativeNumber);
    clifford_gamma->add_option("--v", v_text, "explicit vector r,c1a,...,s");
    clifford_gamma->add_flag("--full", full_chain, "print the full divisor chain");
    add_format(clifford_gamma);
    CLI::App* clifford_check =
        clifford->add_subcommand("check", "Verify the Clifford relation on basis and random pairs");
    clifford_check->add_option("--trials", trials, "random pairs")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    clifford_check->add_option("--seed", seed, "random seed")->capture_default_str();
    add_format(clifford_check);

    CliResult res;
    std::vector<const char*> argv;
    argv.push_back("kummerlab");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        res.out = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.out = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        res.err = std::string("usage error: ") + e.what() +
                  "\nhint: run 'kummerlab --help' for the command list\n";
        res.exit_code = 2;
        return res;
    }

    const auto guard_n = [&](long value, const char* what) {
        if (value > max_n) {
            res.err = std::string("usage error: ") + what + " " + std::to_string(value) +
                      " exceeds the guard " + std::to_string(max_n) +
                      "\nhint: pass --max-n " + std::to_string(value) + " to allow it\n";
            res.exit_code = 2;
            return false;
        }
        return true;
    };

    try {
        if (threads == 0)
            threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

        VerbOutput out;
        std::string verb;
        if (app.got_subcommand(betti) || app.got_subcommand(hodge)) {
            verb = app.got_subcommand(betti) ? "betti" : "hodge";
            if (!guard_n(n, "n"))
                return res;
            const BigradedTable t =
                invariant ? invariant_kummer_cohomology(n, threads) : kummer_cohomology(n, threads);
            json params;
            params["n"] = n;
            params["invariant"] = invariant;
            out = verb == "betti" ? betti_like_output(t, 4 * static_cast<int>(n), params)
                                  : hodge_output(t, 2 * static_cast<int>(n), params);
        } else if (app.got_subcommand(decompose)) {
            verb = "decompose";
            if (!guard_n(n, "n"))
                return res;
            out = decompose_output(n);
        } else if (app.got_subcommand(gamma_profile)) {
            verb = "gamma-profile";
            if (!guard_n(n, "n"))
                return res;
            json params;
            params["n"] = n;
            out = profile_output(noninvariant_profile(n, threads), params);
        } else if (app.got_subcommand(lsc)) {
            verb = "lsc";
            if (!guard_n(n, "n"))
                return res;
            out = lsc_output(lsc_report(n, threads));
        } else if (app.got_subcommand(hilbert)) {
            verb = "hilbert";
            if (m > max_n + 1) {
                res.err = "usage error: m " + std::to_string(m) + " exceeds the guard " +
                          std::to_string(max_n + 1) + "\nhint: pass --max-n " +
                          std::to_string(m - 1) + " to allow it\n";
                res.exit_code = 2;
                return res;
            }
            json params;
            params["m"] = m;
            out = betti_like_output(hilbert_scheme_cohomology(m, threads),
                                    4 * static_cast<int>(m), params);
        } else if (app.got_subcommand(moduli)) {
            verb = "moduli";
            if (!guard_n(n, "n"))
                return res;
            json params;
            params["n"] = n;
            out = betti_like_output(moduli_cohomology(n, threads),
                                    4 * static_cast<int>(n) + 8, params);
        } else if (app.got_subcommand(mukai)) {
            MukaiVector x;
            try {
                x = parse_mukai_vector(x_text);
            } catch (const std::invalid_argument& e) {
                res.err = std::string("usage error: --x: ") + e.what() + "\n";
                res.exit_code = 2;
                return res;
            }
            if (mukai->got_subcommand(mukai_pair)) {
                verb = "mukai pair";
                MukaiVector y;
                try {
                    y = parse_mukai_vector(y_text);
                } catch (const std::invalid_argument& e) {
                    res.err = std::string("usage error: --y: ") + e.what() + "\n";
                    res.exit_code = 2;
                    return res;
                }
                const Integer p = mukai_pairing(x, y);
                out.params["x"] = format_mukai_vector(x);
                out.params["y"] = format_mukai_vector(y);
                out.table = p.str() + "\n";
                out.csv = "pairing\n" + p.str() + "\n";
                out.result["pairing"] = p.str();
            } else if (mukai->got_subcommand(mukai_dual)) {
                verb = "mukai dual";
                const MukaiVector d = dual(x);
                out.params["x"] = format_mukai_vector(x);
                out.table = format_mukai_vector(d) + "\n";
                out.csv = "r,c1a,c1b,c1c,c1d,c1e,c1f,s\n" + format_mukai_vector(d) + "\n";
                out.result["vector"] = vector_json(d);
            } else if (mukai->got_subcommand(mukai_classify)) {
                verb = "mukai classify";
                const MukaiClassification c = classify(x);
                out.params["x"] = format_mukai_vector(x);
                const std::string case_text =
                    c.positivity_case == 0 ? "none" : std::to_string(c.positivity_case);
                out.table = std::string("primitive ") + (c.primitive ? "true" : "false") +
                            "\npositive " + (c.positive ? "true" : "false") +
                            "\npositivity_case " + case_text + "\nlattice_level_effectivity " +
                            (c.lattice_level_effectivity ? "true" : "false") + "\n";
                out.csv = "primitive,positive,positivity_case,lattice_level_effectivity\n" +
                          std::string(c.primitive ? "true" : "false") + "," +
                          (c.positive ? "true" : "false") + "," + case_text + "," +
                          (c.lattice_level_effectivity ? "true" : "false") + "\n";
                out.result["primitive"] = c.primitive;
                out.result["positive"] = c.positive;
                if (c.positivity_case == 0)
                    out.result["positivity_case"] = nullptr;
                else
                    out.result["positivity_case"] = c.positivity_case;
                out.result["lattice_level_effectivity"] = c.lattice_level_effectivity;
            } else {
                verb = "mukai dim";
                const ModuliDimension d = moduli_dimension(x);
                out.params["x"] = format_mukai_vector(x);
                out.table = "dimension " + d.dimension.str() + "\next_rank " + d.ext_rank.str() +
                            "\nmeets_min_dimension " +
                            (d.meets_min_dimension ? "true" : "false") + "\n";
                out.csv = "dimension,ext_rank,meets_min_dimension\n" + d.dimension.str() + "," +
                          d.ext_rank.str() + "," + (d.meets_min_dimension ? "true" : "false") +
                          "\n";
                out.result["dimension"] = d.dimension.str();
                out.result["ext_rank"] = d.ext_rank.str();
                out.result["meets_min_dimension"] = d.meets_min_dimension;
            }
        } else if (app.got_subcommand(clifford)) {
            if (clifford->got_subcommand(clifford_snf)) {
                verb = "clifford snf";
                IntegerMatrix mat;
                try {
                    mat = parse_matrix_arg(matrix_text);
                } catch (const std::invalid_argument& e) {
                    res.err = std::string("usage error: --matrix: ") + e.what() + "\n";
                    res.exit_code = 2;
                    return res;
                }
                json params;
                params["matrix"] = matrix_text;
                out = divisors_output(smith_normal_form(mat).divisors, params);
            } else if (clifford->got_subcommand(clifford_gamma)) {
                verb = "clifford gamma";
                const bool has_n = clifford_gamma->count("--n") > 0;
                const bool has_v = clifford_gamma->count("--v") > 0;
                if (has_n == has_v) {
                    res.err = "usage error: clifford gamma needs exactly one of --n or --v\n";
                    res.exit_code = 2;
                    return res;
                }
                MukaiVector v;
                if (has_n) {
                    v = ideal_sheaf_vector(n);
                } else {
                    try {
                        v = parse_mukai_vector(v_text);
                    } catch (const std::invalid_argument& e) {
                        res.err = std::string("usage error: --v: ") + e.what() + "\n";
                        res.exit_code = 2;
                        return res;
                    }
                }
                json params;
                params["v"] = format_mukai_vector(v);
                params["full"] = full_chain;
                out = divisors_output(full_chain ? gamma_group_full_chain(v) : gamma_group(v),
                                      params);
            } else {
                verb = "clifford check";
                std::mt19937_64 gen(seed);
                bool holds = true;
                for (int a = 0; a < 8 && holds; ++a)
                    for (int b = 0; b < 8 && holds; ++b) {
                        VVector y1, y2;
                        if (a < 4)
                            y1.alpha[static_cast<size_t>(a)] = 1;
                        else
                            y1.omega[static_cast<size_t>(a - 4)] = 1;
                        if (b < 4)
                            y2.alpha[static_cast<size_t>(b)] = 1;
                        else
                            y2.omega[static_cast<size_t>(b - 4)] = 1;
                        holds = clifford_relation_check(y1, y2);
                    }
                for (int i = 0; i < trials && holds; ++i) {
                    VVector y1, y2;
                    for (size_t k = 0; k < 4; ++k) {
                        y1.alpha[k] = draw(gen, -5, 5);
                        y1.omega[k] = draw(gen, -5, 5);
                        y2.alpha[k] = draw(gen, -5, 5);
                        y2.omega[k] = draw(gen, -5, 5);
                    }
                    holds = clifford_relation_check(y1, y2);
                }
                out.params["trials"] = trials;
                out.params["seed"] = seed;
                out.table = holds ? "clifford relation verified on 64 basis pairs and " +
                                        std::to_string(trials) + " random pairs\n"
                                  : "clifford relation FAILED\n";
                out.csv = "basis_pairs,random_pairs,holds\n64," + std::to_string(trials) + "," +
                          (holds ? "true" : "false") + "\n";
                out.result["basis_pairs"] = 64;
                out.result["random_pairs"] = trials;
                out.result["holds"] = holds;
                if (!holds) {
                    res.err = "error: Clifford relation violated\n";
                    res.exit_code = 1;
                }
            }
        }
        res.out = emit(out, verb, format);
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 1;
    }
    return res;
}

} // namespace kummerlab
