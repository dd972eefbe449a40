#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sullivan/catalog.hpp"
#include "sullivan/error.hpp"
#include "sullivan/report.hpp"

using namespace sullivan;

namespace {

struct Options {
    std::optional<int> cutoff;
    std::string output;
    std::string format = "text";
    std::string file;
    std::string name;
};

Json read_document(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw Error(ErrorKind::SchemaError, "cannot read '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_json(text);
}

void emit(const Options& o, const Json& j)
{
    const std::string body = o.format == "structured" ? j.dump(2) + "\n" : render_text(j);
    if (o.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.output);
    if (!out)
        throw Error(ErrorKind::SchemaError, "cannot write '" + o.output + "'");
    out << body;
}

Json embedding_json(const CatalogEmbedding& e)
{
    Json map = Json::object();
    for (const auto& [k, v] : e.map)
        map[k] = v;
    return Json{{"name", e.name}, {"target", e.target}, {"map", map}, {"description", e.description}};
}

Json entry_json(const CatalogEntry& e)
{
    Json emb = Json::array();
    for (const auto& x : e.embeddings)
        emb.push_back(embedding_json(x));
    return Json{{"group", group_to_json(e.group)}, {"embeddings", emb}};
}

AnalysisOptions analysis(const Options& o)
{
    return AnalysisOptions{o.cutoff};
}

void require_kind(const Document& d, DocumentKind k)
{
    if (d.kind != k)
        throw Error(ErrorKind::SchemaError, std::string("/kind: expected ") + std::string(to_string(k)) + ", got " +
                                                std::string(to_string(d.kind)));
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Sullivan models, equivariant cohomology and rational K-theory of group actions"};
    app.require_subcommand(1);
    app.add_option("--cutoff", o.cutoff, "top degree to compute")->check(CLI::NonNegativeNumber);
    app.add_option("--output", o.output, "write to this file instead of stdout");
    app.add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    std::function<void()> action;

    auto* catalog = app.add_subcommand("catalog", "list or show catalog groups");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "list catalog groups")->callback([&] {
        action = [&] {
            Json list = Json::array();
            for (const auto& e : catalog_list())
                list.push_back(entry_json(e));
            emit(o, Json{{"groups", list}});
        };
    });
    auto* show = catalog->add_subcommand("show", "show one group with its embeddings");
    show->add_option("name", o.name)->required();
    show->callback([&] { action = [&] { emit(o, entry_json(catalog_show(o.name))); }; });

    auto* model = app.add_subcommand("model", "model construction");
    model->require_subcommand(1);
    auto* build = model->add_subcommand("build", "build the Sullivan model of a document");
    build->add_option("file", o.file)->required();
    build->callback([&] {
        action = [&] { emit(o, model_section(document_model(load_document(read_document(o.file)), analysis(o)))); };
    });

    auto* coh = app.add_subcommand("cohomology", "Betti numbers and representative cocycles");
    coh->add_option("file", o.file)->required();
    coh->callback([&] {
        action = [&] {
            emit(o, cohomology_section(cohomology(document_model(load_document(read_document(o.file)), analysis(o)))));
        };
    });

    auto* check = app.add_subcommand("check", "surjectivity verdicts");
    check->require_subcommand(1);
    for (auto [verb, kind] : {std::pair{"homogeneous", DocumentKind::Homogeneous},
                              std::pair{"biquotient", DocumentKind::Biquotient},
                              std::pair{"coho1", DocumentKind::CohomogeneityOne},
                              std::pair{"almost-free", DocumentKind::AlmostFree}}) {
        auto* sub = check->add_subcommand(verb, std::string("verdict for a ") + std::string(to_string(kind)) +
                                                    " document");
        sub->add_option("file", o.file)->required();
        sub->callback([&, kind] {
            action = [&, kind] {
                const Document d = load_document(read_document(o.file));
                require_kind(d, kind);
                emit(o, check_section(d, analysis(o)));
            };
        });
    }

    auto* kt = app.add_subcommand("ktheory", "rational K-theory report");
    kt->add_option("file", o.file)->required();
    kt->callback([&] {
        action = [&] { emit(o, ktheory_section(load_document(read_document(o.file)), analysis(o))); };
    });

    auto* rep = app.add_subcommand("report", "full analysis report");
    rep->add_option("file", o.file)->required();
    rep->callback([&] {
        action = [&] {
            const Report r = run_analysis(read_document(o.file), analysis(o));
            emit(o, r.structured);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_validation_error(e.kind()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
