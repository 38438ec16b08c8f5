#include "app.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "modcurve/classify.hpp"
#include "render.hpp"

namespace modcurve::cli {

namespace {

struct Options {
    int n = 0;
    i64 d = 0;
    std::string delta;
    std::string format = "text";
    std::string facts;
    std::string out;
    int max_n = 131;
    unsigned threads = 0;
};

bool facts_enabled(const Options& o) {
    if (auto env = facts_from_env()) return *env;
    return o.facts != "off";
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidInput("cannot open output file " + o.out);
    f << text;
}

void check_level(int n) {
    if (n < 3) throw InvalidInput("N must be at least 3");
    if (n > 256) throw InvalidInput("N must be at most 256");
}

int cmd_subgroups(const Options& o, const std::string& command, std::ostream& out) {
    check_level(o.n);
    auto subs = intermediate_subgroups(o.n);
    if (o.format == "json") {
        Json rows = Json::array();
        for (const auto& d : subs) rows.push_back(to_json(d));
        emit(o, out, envelope(command, rows, {}).dump(2) + "\n");
    } else {
        emit(o, out, text_subgroups(o.n, subs));
    }
    return kExitOk;
}

int cmd_curve(const Options& o, const std::string& command, std::ostream& out) {
    check_level(o.n);
    DeltaSubgroup delta = resolve_delta(o.n, o.delta);
    Classifier cl(ClassifierOptions{facts_enabled(o), o.threads});
    auto rec = cl.classify(o.n, delta);
    if (o.format == "json")
        emit(o, out, envelope(command, to_json(rec), rec.warnings).dump(2) + "\n");
    else if (o.format == "csv")
        emit(o, out, csv_header() + "\n" + csv_row(rec) + "\n");
    else
        emit(o, out, text_record(rec));
    return kExitOk;
}

int cmd_fixed_points(const Options& o, const std::string& command, std::ostream& out) {
    check_level(o.n);
    auto base = fixed_points_X0(o.n, o.d);
    std::optional<LiftReport> lift;
    if (!o.delta.empty()) {
        DeltaSubgroup delta = resolve_delta(o.n, o.delta);
        if (!descends(o.d, delta))
            throw InvalidInput("W" + std::to_string(o.d) + " does not descend to " + curve_name(delta));
        CosetAction action(delta);
        NormalizerElement cand = atkin_lehner(o.d, o.n);
        if (!base.points.empty() && normalizes(base.points.front().matrix, action)) {
            cand.matrix = base.points.front().matrix;
            cand.hat = false;
        }
        lift = lift_fixed_points(action, cand, base);
    }
    if (o.format == "json") {
        Json r;
        r["base"] = to_json(base);
        if (lift) r["lift"] = to_json(*lift);
        emit(o, out, envelope(command, r, {}).dump(2) + "\n");
    } else {
        std::string text = text_fixed_points(base);
        if (lift) text += text_lift(*lift);
        emit(o, out, text);
    }
    return kExitOk;
}

int cmd_census(const Options& o, const std::string& command, std::ostream& out) {
    if (o.max_n < 1 || o.max_n > 256) throw InvalidInput("--max-n must be in [1, 256]");
    Classifier cl(ClassifierOptions{facts_enabled(o), o.threads});
    auto recs = cl.census(o.max_n);
    std::vector<std::string> warnings;
    for (const auto& r : recs)
        for (const auto& w : r.warnings) warnings.push_back(r.name() + ": " + w);
    if (o.format == "json") {
        Json rows = Json::array();
        for (const auto& r : recs) rows.push_back(to_json(r));
        emit(o, out, envelope(command, rows, warnings).dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = csv_header() + "\n";
        for (const auto& r : recs) text += csv_row(r) + "\n";
        emit(o, out, text);
    } else {
        std::string text = text_census(recs);
        for (const auto& w : warnings) text += "warning: " + w + "\n";
        emit(o, out, text);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Intermediate modular curves X_Delta(N): genus, fixed points and bielliptic census", "modcurve"};
    app.require_subcommand(1);
    auto format = [&](CLI::App* sc, std::vector<std::string> allowed) {
        sc->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
    };

    auto* sub = app.add_subcommand("subgroups", "List the intermediate subgroups of (Z/NZ)^*");
    sub->add_option("N", o.n, "Level")->required();
    format(sub, {"text", "json"});

    auto* curve = app.add_subcommand("curve", "Classify one curve X_Delta(N)");
    curve->add_option("N", o.n, "Level")->required();
    curve->add_option("--delta", o.delta, "Label D1, X0, X1 or element list")->required();
    curve->add_option("--facts", o.facts, "Curated argument facts")->check(CLI::IsMember({"on", "off"}));
    format(curve, {"text", "json", "csv"});

    auto* fp = app.add_subcommand("fixed-points", "Fixed points of W_d on X0(N), lifted to X_Delta(N) with --delta");
    fp->add_option("N", o.n, "Level")->required();
    fp->add_option("d", o.d, "Hall divisor")->required();
    fp->add_option("--delta", o.delta, "Label or element list");
    format(fp, {"text", "json"});

    auto* cen = app.add_subcommand("census", "Classify every intermediate curve up to a level");
    cen->add_option("--max-n", o.max_n, "Largest level");
    cen->add_option("--out", o.out, "Output file");
    cen->add_option("--facts", o.facts, "Curated argument facts")->check(CLI::IsMember({"on", "off"}));
    cen->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
    format(cen, {"text", "json", "csv"});

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    std::string command = "modcurve";
    for (const auto& a : args) command += " " + a;
    try {
        if (*sub) return cmd_subgroups(o, command, out);
        if (*curve) return cmd_curve(o, command, out);
        if (*fp) return cmd_fixed_points(o, command, out);
        if (*cen) return cmd_census(o, command, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInvalid;
}

}  // namespace modcurve::cli
