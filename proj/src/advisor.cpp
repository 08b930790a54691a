#include "donorbench/advisor.hpp"

namespace donorbench {

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::classification: return "classification";
    case Verdict::get_more_data: return "get more data";
    case Verdict::regression_out_of_scope: return "regression (out of scope)";
    case Verdict::clustering_out_of_scope: return "clustering (out of scope)";
    }
    return "unknown";
}

Recommendation recommend(const TaskProfile& profile)
{
    Recommendation r;
    if (profile.n_samples <= 50) {
        r.trail.push_back(">50 samples : No");
        r.verdict = Verdict::get_more_data;
        return r;
    }
    r.trail.push_back(">50 samples : Yes");

    if (!profile.predicting_category) {
        r.trail.push_back("Predicting a category : No");
        if (!profile.labeled) {
            r.trail.push_back("Labeled Data : No");
            r.verdict = Verdict::clustering_out_of_scope;
            return r;
        }
        r.trail.push_back("Labeled Data : Yes");
        r.verdict = Verdict::regression_out_of_scope;
        return r;
    }
    r.trail.push_back("Predicting a category : Yes");

    if (!profile.labeled) {
        r.trail.push_back("Labeled Data : No");
        r.verdict = Verdict::clustering_out_of_scope;
        return r;
    }
    r.trail.push_back("Labeled Data : Yes");
    r.trail.push_back("Therefore classification problem");
    r.verdict = Verdict::classification;

    if (profile.n_samples < 100000) {
        r.trail.push_back("<100k samples : Yes");
    } else {
        r.trail.push_back("<100k samples : No");
        r.note = "large-sample branch not charted; returning the same shortlist";
    }
    // Flowchart picks, plus naive Bayes for its binary-classification accuracy.
    r.classifiers = {ClassifierKind::svc_rbf, ClassifierKind::perceptron, ClassifierKind::knn,
                     ClassifierKind::decision_tree, ClassifierKind::bernoulli_nb};
    return r;
}

}  // namespace donorbench
