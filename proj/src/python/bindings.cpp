#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "reprank/io.hpp"
#include "reprank/metrics.hpp"
#include "reprank/methods.hpp"
#include "reprank/spam.hpp"
#include "reprank/sweep.hpp"

namespace py = pybind11;
using namespace reprank;

namespace {

RatingDataset build_dataset(const std::vector<std::tuple<std::string, std::string, double>>& rows,
                            const RatingScale& scale) {
    std::vector<Triple> triples;
    triples.reserve(rows.size());
    for (const auto& [u, o, r] : rows)
        triples.push_back({u, o, r});
    return RatingDataset::build(triples, scale);
}

}  // namespace

PYBIND11_MODULE(_reprank, m) {
    m.doc() = "User reputation ranking on bipartite rating networks";

    py::register_exception<Error>(m, "ReprankError");

    py::class_<RatingScale>(m, "RatingScale")
        .def(py::init<std::vector<double>>())
        .def_static("five_star", &RatingScale::five_star)
        .def_property_readonly("values", &RatingScale::values);

    py::class_<RatingDataset>(m, "RatingDataset")
        .def_static(
            "build",
            [](const std::vector<std::tuple<std::string, std::string, double>>& rows,
               const RatingScale& scale) { return build_dataset(rows, scale); },
            py::arg("triples"), py::arg("scale") = RatingScale::five_star())
        .def_property_readonly("num_users", &RatingDataset::num_users)
        .def_property_readonly("num_objects", &RatingDataset::num_objects)
        .def_property_readonly("num_ratings", &RatingDataset::num_ratings)
        .def_property_readonly("sparsity", &RatingDataset::sparsity)
        .def_property_readonly("user_ids", &RatingDataset::user_ids)
        .def_property_readonly("object_ids", &RatingDataset::object_ids)
        .def("user_degree",
             [](const RatingDataset& ds, const std::string& id) { return ds.user_degree(id); })
        .def("object_degree",
             [](const RatingDataset& ds, const std::string& id) { return ds.object_degree(id); })
        .def("triples", [](const RatingDataset& ds) {
            std::vector<std::tuple<std::string, std::string, double>> rows;
            for (const auto& t : ds.triples())
                rows.emplace_back(t.user, t.object, t.rating);
            return rows;
        });

    py::class_<MethodConfig>(m, "MethodConfig")
        .def(py::init<>())
        .def_readwrite("delta_threshold", &MethodConfig::delta_threshold)
        .def_readwrite("max_iterations", &MethodConfig::max_iterations)
        .def_readwrite("ir_beta", &MethodConfig::ir_beta)
        .def_readwrite("ir_epsilon", &MethodConfig::ir_epsilon)
        .def_readwrite("rr_theta", &MethodConfig::rr_theta)
        .def_readwrite("sigma_floor", &MethodConfig::sigma_floor);

    py::class_<ReputationVector>(m, "ReputationVector")
        .def_readonly("values", &ReputationVector::values)
        .def_readonly("iterations", &ReputationVector::iterations)
        .def_readonly("converged", &ReputationVector::converged)
        .def_readonly("final_change", &ReputationVector::final_change);

    m.def("rank", &rank_by_name, py::arg("method"), py::arg("dataset"),
          py::arg("config") = MethodConfig{},
          "Run one of gr, igr, ir, cr, rr on a dataset");
    m.def("estimate_quality",
          [](const RatingDataset& ds, const std::vector<double>& rep) {
              return estimate_quality(ds, rep).values;
          });

    py::class_<SpamExperiment>(m, "SpamExperiment")
        .def_readonly("attacked", &SpamExperiment::attacked)
        .def_readonly("spammers", &SpamExperiment::spammers)
        .def_readonly("d", &SpamExperiment::d);

    m.def(
        "inject",
        [](const RatingDataset& ds, const std::string& kind, double p, std::uint64_t seed) {
            return inject(ds, SpamSpec{spam_kind_from_name(kind), p, seed});
        },
        py::arg("dataset"), py::arg("kind"), py::arg("p"), py::arg("seed"));

    m.def("recall_at_L", &recall_at_L, py::arg("dataset"), py::arg("reputations"),
          py::arg("spammers"), py::arg("L"));
    m.def("auc", &auc, py::arg("dataset"), py::arg("reputations"), py::arg("spammers"));
    m.def("rating_error", &rating_error);
    m.def("trend_following", &trend_following);
    m.def(
        "simpson_diversity",
        [](const std::vector<double>& values, std::size_t bins) {
            return simpson_diversity(values, bins);
        },
        py::arg("reputations"), py::arg("bins") = 100);
    m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) {
        return pearson(x, y);
    });

    m.def(
        "load_triples",
        [](const std::filesystem::path& path) {
            return load_triples(path, {}, RatingScale::five_star());
        },
        py::arg("path"));
    m.def("write_dataset", [](const std::filesystem::path& path, const RatingDataset& ds) {
        write_dataset(path, ds);
    });
    m.def("sample_subset", &sample_subset, py::arg("dataset"), py::arg("user_count"),
          py::arg("min_user_degree"), py::arg("seed"));
}
