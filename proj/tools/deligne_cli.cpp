// deligne: batch front end over the C API.
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "deligne/deligne.h"

namespace {

struct Options {
    bool json = false;
    std::string cache;
    int threads = 1;
    std::string delta;
    int m = -1, n = -1;
    std::string suite;
    bool dump = false;
    std::vector<std::string> args;
};

using Call = std::function<int(dg_context*, dg_result**)>;

int finish(dg_context* ctx, const Options& o, const Call& call) {
    if (!ctx) {
        std::fprintf(stderr, "error: out of memory\n");
        return DG_ERR_INTERNAL;
    }
    int st = DG_OK;
    if (o.threads != 1) st = dg_set_threads(ctx, o.threads);
    if (st == DG_OK && !o.cache.empty()) st = dg_cache_open(ctx, o.cache.c_str());
    dg_result* r = nullptr;
    if (st == DG_OK) st = call(ctx, &r);
    if (st == DG_OK && !o.cache.empty()) st = dg_cache_save(ctx);
    if (st != DG_OK) {
        std::fprintf(stderr, "error: %s\n", dg_last_error(ctx));
        dg_result_free(r);
        return st;
    }
    if (o.json)
        std::printf("%s\n", dg_result_json(r));
    else
        std::fputs(dg_result_text(r), stdout);
    int code = dg_result_passed(r) ? DG_OK : DG_ERR_INTERNAL;  // a failed sweep is an internal disagreement
    dg_result_free(r);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Deligne's category Rep(GL_delta)", "deligne"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--cache", o.cache, "persistent Littlewood-Richardson cache file");
    app.add_option("--threads", o.threads, "worker threads for check sweeps");
    app.add_flag_callback("--version", [] {
        std::printf("deligne %s\n", dg_version());
        std::exit(0);
    });

    auto delta_opt = [&](CLI::App* s, const char* help) { s->add_option("--delta", o.delta, help)->required(); };
    auto mn_opts = [&](CLI::App* s) {
        s->add_option("--m", o.m, "even dimension")->required()->check(CLI::NonNegativeNumber);
        s->add_option("--n", o.n, "odd dimension")->required()->check(CLI::NonNegativeNumber);
    };
    auto bps = [&](CLI::App* s, std::size_t k, const char* name) {
        s->add_option(name, o.args, "bipartition(s) such as \"(3,2|3,1)\"")->required()->expected(static_cast<int>(k));
    };

    auto* lift = app.add_subcommand("lift", "lift_delta: R_delta -> R_t");
    delta_opt(lift, "numeric delta");
    bps(lift, 1, "bp");
    auto* unlift = app.add_subcommand("unlift", "inverse of lift; takes a ring \"t\" vector as JSON");
    delta_opt(unlift, "numeric delta");
    unlift->add_option("vector", o.args, "vector JSON")->required()->expected(1);
    auto* tensor = app.add_subcommand("tensor", "decompose L(a) (x) L(b)");
    delta_opt(tensor, "delta or t");
    bps(tensor, 2, "bps");
    auto* chr = app.add_subcommand("char", "character of W(bp) for gl(m|n)");
    mn_opts(chr);
    bps(chr, 1, "bp");
    auto* dim = app.add_subcommand("dim", "superdimension of W(bp) for gl(m|n)");
    mn_opts(dim);
    bps(dim, 1, "bp");
    auto* caps = app.add_subcommand("caps", "weight and cap diagram");
    delta_opt(caps, "integer delta");
    bps(caps, 1, "bp");
    auto* cross = app.add_subcommand("cross", "(m|n)-cross and almost-cross tests");
    mn_opts(cross);
    bps(cross, 1, "bp");
    auto* form = app.add_subcommand("form", "dim Hom(L(a), L(b))");
    delta_opt(form, "delta");
    bps(form, 2, "bps");
    auto* check = app.add_subcommand("check", "oracle sweeps and golden values");
    check->add_option("--suite", o.suite, "lr | gamma | hom | golden | all")->required();
    check->add_flag("--dump-diagrams", o.dump, "print the primitive idempotents found by the hom sweep");

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return DG_ERR_PARSE;
    }

    const char* a0 = o.args.size() > 0 ? o.args[0].c_str() : nullptr;
    const char* a1 = o.args.size() > 1 ? o.args[1].c_str() : nullptr;
    const char* d = o.delta.c_str();
    Call call;
    if (lift->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_lift(c, d, a0, r); };
    else if (unlift->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_unlift(c, d, a0, r); };
    else if (tensor->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_tensor(c, d, a0, a1, r); };
    else if (chr->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_char(c, o.m, o.n, a0, r); };
    else if (dim->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_dim(c, o.m, o.n, a0, r); };
    else if (caps->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_caps(c, d, a0, r); };
    else if (cross->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_cross(c, o.m, o.n, a0, r); };
    else if (form->parsed())
        call = [&](dg_context* c, dg_result** r) { return dg_form(c, d, a0, a1, r); };
    else
        call = [&](dg_context* c, dg_result** r) { return dg_check(c, o.suite.c_str(), o.dump ? 1 : 0, r); };

    dg_context* ctx = dg_context_new();
    int code = finish(ctx, o, call);
    dg_context_free(ctx);
    return code;
}
