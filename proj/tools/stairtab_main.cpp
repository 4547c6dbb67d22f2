#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stairtab/bijections.hpp"
#include "stairtab/genfunc.hpp"
#include "stairtab/json_io.hpp"
#include "stairtab/verify.hpp"

namespace {

using namespace stairtab;

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer list '" + s + "'");
        }
    }
    return out;
}

Partition parse_partition(const std::string& s, const char* what) {
    return Partition(parse_int_list(s, what));
}

Cell parse_cell(const std::string& s) {
    std::vector<int> v = parse_int_list(s, "cell");
    if (v.size() != 2) throw std::invalid_argument("cell: expected row,col");
    return Cell{v[0], v[1]};
}

Json read_json_input(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return Json::parse(in);
}

struct ShapeFlags {
    std::string lambda;
    std::string mu;
    int n = 0;

    SkewShape resolve() const {
        Partition inner = parse_partition(mu, "--mu");
        Partition outer;
        if (!lambda.empty())
            outer = parse_partition(lambda, "--lambda");
        else if (n > 0)
            outer = staircase(n);
        else
            throw std::invalid_argument("either --lambda or --n is required");
        return SkewShape(outer, inner);
    }
};

void add_shape_flags(CLI::App* cmd, ShapeFlags& f) {
    cmd->add_option("--lambda", f.lambda, "Outer partition, comma separated");
    cmd->add_option("--mu", f.mu, "Inner partition, comma separated");
    cmd->add_option("--n", f.n, "Staircase size; outer defaults to (n,n-1,...,1)");
}

int cmd_enumerate(const std::string& kind, const ShapeFlags& shape_flags,
                  const std::string& set, int m) {
    SkewShape shape = shape_flags.resolve();
    IndexSet I(m, parse_int_list(set, "--set"));
    Json out = Json::array();
    if (kind == "gst") {
        for (const GstTableau& t : enumerate_gst(shape, I, m)) out.push_back(to_json(t));
    } else if (kind == "qtab") {
        for (const QTableau& t : enumerate_qtab(shape, I, m)) out.push_back(to_json(t));
    } else {
        throw std::invalid_argument("enumerate: kind must be gst or qtab");
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_gf(const std::string& kind, const ShapeFlags& shape_flags, const std::string& set,
           int m) {
    SkewShape shape = shape_flags.resolve();
    MultiPoly p(m);
    if (kind == "gst")
        p = gst_gf(shape, IndexSet(m, parse_int_list(set, "--set")), m);
    else if (kind == "schur")
        p = schur_skew_poly(shape, m);
    else if (kind == "qtr")
        p = qtr_poly(shape, m);
    else if (kind == "doubled")
        p = doubled_substitution(shape, m);
    else if (kind == "shifted")
        p = shifted_q_poly(shape, std::max(shape_flags.n, shape.outer().length()), m);
    else
        throw std::invalid_argument("gf: kind must be gst, schur, qtr, doubled or shifted");
    std::cout << to_json(p).dump() << '\n';
    return 0;
}

int cmd_expand(const std::string& input, int m) {
    MultiPoly p = poly_from_json(read_json_input(input), m);
    std::cout << to_json(schur_expand(p)).dump() << '\n';
    return 0;
}

int cmd_jdt_trace(const std::string& file, const std::string& set,
                  const std::string& direction, const std::string& hole_text) {
    Json j = read_json_input(file);
    GstTableau t = gst_from_json(j);
    Cell hole = parse_cell(hole_text);
    int bound = std::max(t.max_entry(), 1);
    std::vector<int> members = parse_int_list(set, "--set");
    for (int v : members) bound = std::max(bound, v);
    IndexSet I(bound, members);
    SlideResult result;
    if (direction == "forward")
        result = forward_jdt(t, I, hole);
    else if (direction == "reverse")
        result = reverse_jdt(t, I, hole);
    else
        throw std::invalid_argument("jdt-trace: direction must be forward or reverse");
    std::cout << to_json(result).dump() << '\n';
    return 0;
}

int emit_and_grade(const std::vector<VerifyReport>& reports, const std::string& format) {
    if (format == "summary")
        emit_report_summary(std::cout, reports);
    else
        emit_report_json(std::cout, reports);
    return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staircase tableau engine: enumeration, slides, bijections and"
                 " symmetric-polynomial identity checks"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List valid tableaux as JSON");
    std::string enum_kind;
    ShapeFlags enum_shape;
    std::string enum_set;
    int enum_m = 3;
    enumerate->add_option("kind", enum_kind, "gst or qtab")->required();
    add_shape_flags(enumerate, enum_shape);
    enumerate->add_option("--set", enum_set, "Index set, comma separated");
    enumerate->add_option("--m", enum_m, "Alphabet bound");

    // gf
    auto* gf = app.add_subcommand("gf", "Generating function as polynomial JSON");
    std::string gf_kind;
    ShapeFlags gf_shape;
    std::string gf_set;
    int gf_m = 3;
    gf->add_option("kind", gf_kind, "gst, schur, qtr, doubled or shifted")->required();
    add_shape_flags(gf, gf_shape);
    gf->add_option("--set", gf_set, "Index set (gst kind only)");
    gf->add_option("--m", gf_m, "Number of x variables");

    // expand
    auto* expand = app.add_subcommand("expand", "Schur expansion of polynomial JSON");
    std::string expand_input = "-";
    int expand_m = 0;
    expand->add_option("input", expand_input, "Input file, or - for stdin");
    expand->add_option("--m", expand_m, "Variable count when the input is empty");

    // jdt-trace
    auto* trace = app.add_subcommand("jdt-trace", "Run one slide and print the trace");
    std::string trace_file, trace_set, trace_dir = "forward", trace_hole;
    trace->add_option("file", trace_file, "Tableau JSON file, or - for stdin")->required();
    trace->add_option("--set", trace_set, "Index set, comma separated");
    trace->add_option("--direction", trace_dir, "forward or reverse");
    trace->add_option("--hole", trace_hole, "Target cell row,col")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run one theorem check");
    std::string v_theorem, v_mu, v_lambda, v_set, v_set2, v_format = "json";
    int v_n = 0, v_m = 3, v_letter = 0;
    long v_random = 0;
    bool v_n_given = false;
    verify->add_option("--theorem", v_theorem, "Theorem id")->required();
    verify->add_option("--n", v_n, "Staircase size")->each([&](const std::string&) {
        v_n_given = true;
    });
    verify->add_option("--mu", v_mu, "Inner partition");
    verify->add_option("--lambda", v_lambda, "Outer partition");
    verify->add_option("--set", v_set, "Index set I");
    verify->add_option("--set2", v_set2, "Index set I'");
    verify->add_option("--letter", v_letter, "Letter for single-step checks");
    verify->add_option("--m", v_m, "Alphabet bound / variable count");
    verify->add_option("--random-cases", v_random,
                       "Run this many seeded random cases instead of the exhaustive check");
    verify->add_option("--format", v_format, "json or summary")
        ->check(CLI::IsMember({"json", "summary"}));

    // sweep
    auto* sw = app.add_subcommand("sweep", "Run a theorem over a parameter sweep");
    std::string s_theorem, s_format = "json";
    SweepOptions s_options;
    sw->add_option("--theorem", s_theorem, "Theorem id")->required();
    sw->add_option("--n-max", s_options.n_max, "Largest staircase size");
    sw->add_option("--m", s_options.m, "Alphabet bound / variable count");
    sw->add_option("--size-max", s_options.size_max, "Largest outer shape size");
    sw->add_option("--jobs", s_options.jobs, "Worker threads");
    sw->add_option("--format", s_format, "json or summary")
        ->check(CLI::IsMember({"json", "summary"}));

    try {
        app.parse(argc, argv);

        if (*enumerate) return cmd_enumerate(enum_kind, enum_shape, enum_set, enum_m);
        if (*gf) return cmd_gf(gf_kind, gf_shape, gf_set, gf_m);
        if (*expand) return cmd_expand(expand_input, expand_m);
        if (*trace) return cmd_jdt_trace(trace_file, trace_set, trace_dir, trace_hole);

        if (*verify) {
            VerifyParams params;
            if (v_n_given) params.n = v_n;
            if (!v_mu.empty()) params.mu = parse_partition(v_mu, "--mu");
            if (!v_lambda.empty()) params.lambda = parse_partition(v_lambda, "--lambda");
            if (!v_set.empty()) params.set = IndexSet(v_m, parse_int_list(v_set, "--set"));
            if (!v_set2.empty()) params.set2 = IndexSet(v_m, parse_int_list(v_set2, "--set2"));
            if (v_letter > 0) params.letter = v_letter;
            params.m = v_m;
            if (v_random > 0) params.random_cases = v_random;
            std::vector<VerifyReport> reports{
                run_verify(theorem_from_string(v_theorem), params)};
            return emit_and_grade(reports, v_format);
        }

        if (*sw) {
            std::vector<VerifyReport> reports = sweep(theorem_from_string(s_theorem), s_options);
            return emit_and_grade(reports, s_format);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
