#include "donorbench/gp_optimizer.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"

namespace donorbench {

namespace {

constexpr std::uint64_t kGaStream = 0x6761;  // keeps GA draws apart from fold seeds

template <typename T>
bool contains_value(const std::vector<T>& values, const T& v)
{
    return std::find(values.begin(), values.end(), v) != values.end();
}

// Draws every gridded hyperparameter for the given kind.
ClassifierSpec draw_classifier(ClassifierKind kind, const SearchSpace& space, Rng& rng)
{
    auto spec = ClassifierSpec::defaults(kind);
    for (const auto& [key, values] : space.grid(kind)) {
        spec.set(key, values[rng.uniform_index(values.size())]);
    }
    return spec;
}

// Uniform pick from values, excluding `current` when any alternative exists.
template <typename T>
T draw_other(const std::vector<T>& values, const T& current, Rng& rng)
{
    std::vector<T> others;
    for (const auto& v : values) {
        if (!(v == current)) {
            others.push_back(v);
        }
    }
    if (others.empty()) {
        return values[rng.uniform_index(values.size())];
    }
    return others[rng.uniform_index(others.size())];
}

std::vector<Individual> rank(std::vector<Individual> population)
{
    std::sort(population.begin(), population.end(), ranks_before);
    return population;
}

class FitnessCache {
public:
    FitnessCache(const Dataset& ds, const FoldPlan& plan, std::uint64_t seed, unsigned threads)
        : ds_(ds), plan_(plan), seed_(seed), threads_(threads)
    {
    }

    // Fills fitness for every individual, evaluating each distinct unseen
    // genome once. Evaluation order is the population order.
    void evaluate(std::vector<Individual>& population, std::vector<Individual>& failures)
    {
        std::vector<std::size_t> pending;
        std::vector<std::string> keys;
        for (std::size_t i = 0; i < population.size(); ++i) {
            auto key = population[i].genome.encode();
            if (!cache_.contains(key) && !contains_value(keys, key)) {
                keys.push_back(key);
                pending.push_back(i);
            }
        }

        std::vector<Individual> results(pending.size());
        detail::parallel_for(pending.size(), threads_, [&](std::size_t p) {
            Individual ind{population[pending[p]].genome, 0.0, {}};
            try {
                ind.fitness = cross_validate(ind.genome, ds_, plan_, seed_).mean_accuracy;
            } catch (const std::exception& e) {
                ind.fitness = 0.0;
                ind.error = e.what();
            }
            results[p] = std::move(ind);
        });

        for (std::size_t p = 0; p < pending.size(); ++p) {
            if (!results[p].error.empty()) {
                failures.push_back(results[p]);
            }
            cache_.emplace(keys[p], std::move(results[p]));
        }
        evaluations_ += pending.size();

        for (auto& ind : population) {
            const auto& cached = cache_.at(ind.genome.encode());
            ind.fitness = cached.fitness;
            ind.error = cached.error;
        }
    }

    std::size_t evaluations() const noexcept { return evaluations_; }

private:
    const Dataset& ds_;
    const FoldPlan& plan_;
    std::uint64_t seed_;
    unsigned threads_;
    std::map<std::string, Individual> cache_;
    std::size_t evaluations_ = 0;
};

GenerationRecord make_record(std::size_t generation, const std::vector<Individual>& population,
                             std::size_t evaluations)
{
    GenerationRecord rec;
    rec.generation = generation;
    rec.population = population;
    const auto ranked = rank(population);
    rec.best_fitness = ranked.front().fitness.value_or(0.0);
    rec.best_genome = ranked.front().genome;
    double sum = 0.0;
    for (const auto& ind : population) {
        sum += ind.fitness.value_or(0.0);
    }
    rec.mean_fitness = sum / static_cast<double>(population.size());
    rec.evaluations = evaluations;
    return rec;
}

const Individual& tournament_pick(const std::vector<Individual>& population, std::size_t size, Rng& rng)
{
    const Individual* best = &population[rng.uniform_index(population.size())];
    for (std::size_t t = 1; t < size; ++t) {
        const Individual& challenger = population[rng.uniform_index(population.size())];
        if (ranks_before(challenger, *best)) {
            best = &challenger;
        }
    }
    return *best;
}

}  // namespace

SearchSpace SearchSpace::default_space()
{
    using V = std::vector<ParamValue>;
    using I = std::int64_t;
    SearchSpace s;
    s.preprocessors = {ScalerKind::minmax, ScalerKind::standard};
    s.classifiers = all_classifier_kinds();
    s.grids[ClassifierKind::perceptron] = {
        {"epochs", V{I{5}, I{10}, I{20}}},
        {"learning_rate", V{0.01, 0.1, 1.0}},
    };
    s.grids[ClassifierKind::knn] = {
        {"k", V{I{1}, I{3}, I{5}, I{7}, I{11}}},
        {"p", V{I{1}, I{2}}},
    };
    s.grids[ClassifierKind::decision_tree] = {
        {"max_depth", V{std::string("none"), I{3}, I{5}, I{10}}},
        {"min_samples_leaf", V{I{1}, I{2}, I{5}, I{10}}},
        {"min_samples_split", V{I{2}, I{5}, I{10}, I{20}}},
    };
    s.grids[ClassifierKind::bernoulli_nb] = {
        {"alpha", V{0.01, 0.1, 1.0, 10.0}},
        {"binarize", V{0.0, 0.5}},
    };
    s.grids[ClassifierKind::svc_rbf] = {
        {"C", V{0.1, 0.5, 1.0, 5.0, 10.0, 25.0}},
        {"gamma", V{std::string("auto"), 0.01, 0.1, 1.0}},
    };
    s.grids[ClassifierKind::linear_svc] = {
        {"C", V{0.1, 0.5, 1.0, 5.0, 10.0, 25.0}},
    };
    return s;
}

const ParamGrid& SearchSpace::grid(ClassifierKind kind) const
{
    static const ParamGrid empty;
    auto it = grids.find(kind);
    return it == grids.end() ? empty : it->second;
}

void SearchSpace::validate() const
{
    if (classifiers.empty()) {
        throw InvalidArgument("search space: no classifier kinds");
    }
    for (auto p : preprocessors) {
        if (p == ScalerKind::none) {
            throw InvalidArgument("search space: 'none' is expressed by leaving the preprocessor out");
        }
    }
    for (const auto& [kind, grid] : grids) {
        for (const auto& [key, values] : grid) {
            if (values.empty()) {
                throw InvalidArgument("search space: empty grid for " + to_string(kind) + "." + key);
            }
            for (const auto& v : values) {
                // set() throws on unknown keys and illegal values.
                ClassifierSpec::defaults(kind).set(key, v);
            }
        }
    }
}

bool SearchSpace::contains(const PipelineSpec& spec) const
{
    try {
        spec.classifier.validate();
    } catch (const InvalidArgument&) {
        return false;
    }
    if (spec.preprocessor != ScalerKind::none && !contains_value(preprocessors, spec.preprocessor)) {
        return false;
    }
    const auto kind = spec.classifier.kind();
    if (!contains_value(classifiers, kind)) {
        return false;
    }
    const auto defaults = ClassifierSpec::defaults(kind);
    const auto& g = grid(kind);
    for (const auto& [key, value] : spec.classifier.params()) {
        auto it = g.find(key);
        if (it == g.end()) {
            if (!(value == defaults.at(key))) {
                return false;
            }
            continue;
        }
        const bool listed = std::any_of(it->second.begin(), it->second.end(), [&](const ParamValue& v) {
            return ClassifierSpec::defaults(kind).set(key, v).at(key) == value;
        });
        if (!listed) {
            return false;
        }
    }
    return true;
}

void EvolveConfig::validate() const
{
    if (population_size < 2) {
        throw InvalidArgument("evolve: population_size must be at least 2");
    }
    if (elitism > population_size) {
        throw InvalidArgument("evolve: elitism exceeds population_size");
    }
    if (tournament < 1) {
        throw InvalidArgument("evolve: tournament size must be at least 1");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0) || !(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw InvalidArgument("evolve: rates must lie in [0, 1]");
    }
}

bool ranks_before(const Individual& a, const Individual& b)
{
    if (a.fitness.has_value() != b.fitness.has_value()) {
        return a.fitness.has_value();
    }
    if (a.fitness && *a.fitness != *b.fitness) {
        return *a.fitness > *b.fitness;
    }
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.genome.encode() < b.genome.encode();
}

PipelineSpec random_pipeline(const SearchSpace& space, Rng& rng)
{
    PipelineSpec spec;
    if (!space.preprocessors.empty() && rng.bernoulli(0.5)) {
        spec.preprocessor = space.preprocessors[rng.uniform_index(space.preprocessors.size())];
    }
    const auto kind = space.classifiers[rng.uniform_index(space.classifiers.size())];
    spec.classifier = draw_classifier(kind, space, rng);
    return spec;
}

PipelineSpec mutate(const PipelineSpec& spec, const SearchSpace& space, Rng& rng)
{
    enum class Move { redraw_param, swap_classifier, edit_preprocessor };

    const auto kind = spec.classifier.kind();
    const auto& g = space.grid(kind);
    std::vector<Move> moves;
    if (!g.empty()) {
        moves.push_back(Move::redraw_param);
    }
    if (space.classifiers.size() > 1) {
        moves.push_back(Move::swap_classifier);
    }
    if (!space.preprocessors.empty()) {
        moves.push_back(Move::edit_preprocessor);
    }
    if (moves.empty()) {
        return spec;
    }

    PipelineSpec child = spec;
    switch (moves[rng.uniform_index(moves.size())]) {
    case Move::redraw_param: {
        auto it = g.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(rng.uniform_index(g.size())));
        const auto& [key, values] = *it;
        // Compare in coerced form so an int grid value matches a stored int.
        std::vector<ParamValue> coerced;
        for (const auto& v : values) {
            coerced.push_back(ClassifierSpec::defaults(kind).set(key, v).at(key));
        }
        child.classifier.set(key, draw_other(coerced, spec.classifier.at(key), rng));
        break;
    }
    case Move::swap_classifier: {
        const auto next = draw_other(space.classifiers, kind, rng);
        child.classifier = draw_classifier(next, space, rng);
        break;
    }
    case Move::edit_preprocessor: {
        enum class Edit { add, remove, replace };
        std::vector<Edit> edits;
        if (spec.preprocessor == ScalerKind::none) {
            edits.push_back(Edit::add);
        } else {
            edits.push_back(Edit::remove);
            if (space.preprocessors.size() > 1) {
                edits.push_back(Edit::replace);
            }
        }
        switch (edits[rng.uniform_index(edits.size())]) {
        case Edit::add:
            child.preprocessor = space.preprocessors[rng.uniform_index(space.preprocessors.size())];
            break;
        case Edit::remove:
            child.preprocessor = ScalerKind::none;
            break;
        case Edit::replace:
            child.preprocessor = draw_other(space.preprocessors, spec.preprocessor, rng);
            break;
        }
        break;
    }
    }
    return child;
}

PipelineSpec crossover(const PipelineSpec& a, const PipelineSpec& b, Rng& rng)
{
    if (rng.bernoulli(0.5)) {
        return PipelineSpec{a.preprocessor, b.classifier};
    }
    return PipelineSpec{b.preprocessor, a.classifier};
}

EvolutionHistory evolve(const Dataset& ds, const SearchSpace& space, const EvolveConfig& config, const FoldPlan& plan,
                        std::uint64_t seed)
{
    config.validate();
    space.validate();

    Rng rng(derive_seed(seed, kGaStream));
    FitnessCache cache(ds, plan, seed, config.threads);
    EvolutionHistory history;

    std::vector<Individual> population;
    population.reserve(config.population_size);
    for (std::size_t i = 0; i < config.population_size; ++i) {
        population.push_back({random_pipeline(space, rng), std::nullopt, {}});
    }
    cache.evaluate(population, history.failures);
    history.generations.push_back(make_record(0, population, cache.evaluations()));

    for (std::size_t gen = 1; gen <= config.generations; ++gen) {
        const auto ranked = rank(population);
        std::vector<Individual> next(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(config.elitism));
        while (next.size() < config.population_size) {
            PipelineSpec child = tournament_pick(population, config.tournament, rng).genome;
            if (rng.bernoulli(config.crossover_rate)) {
                const auto& mate = tournament_pick(population, config.tournament, rng);
                child = crossover(child, mate.genome, rng);
            }
            if (rng.bernoulli(config.mutation_rate)) {
                child = mutate(child, space, rng);
            }
            next.push_back({std::move(child), std::nullopt, {}});
        }
        population = std::move(next);
        cache.evaluate(population, history.failures);
        history.generations.push_back(make_record(gen, population, cache.evaluations()));
    }

    std::vector<Individual> bests;
    for (const auto& rec : history.generations) {
        bests.push_back(rank(rec.population).front());
    }
    history.champion = rank(std::move(bests)).front();
    history.evaluations = cache.evaluations();
    return history;
}

}  // namespace donorbench
