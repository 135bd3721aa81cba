#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reprank/dataset.hpp"
#include "reprank/methods.hpp"
#include "reprank/spam.hpp"

namespace reprank {

struct ExperimentPlan {
    std::vector<std::string> methods;
    SpamKind attack = SpamKind::random;
    std::vector<double> p_values;
    int realizations = 100;
    std::uint64_t base_seed = 0;
    MethodConfig config;
    bool subgroups = false;
    int threads = 1;

    void validate() const;
};

struct SweepRow {
    std::string method;
    std::string attack;
    double p = 0.0;
    std::string realization;  // index, "mean" or "std"
    std::string metric;
    double value = 0.0;
    std::string error;  // nonempty when this cell failed
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool partial_failure = false;
};

// Injection seed for cell (p index, realization) is derived from the base
// seed alone, so results do not depend on the method list or on how
// realizations are scheduled across threads.
SweepResult run_sweep(const RatingDataset& dataset, const ExperimentPlan& plan);

std::vector<std::string> sweep_table_header();
std::vector<std::vector<std::string>> sweep_table_rows(const SweepResult& result);

}  // namespace reprank
