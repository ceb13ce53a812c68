#include "tbl/errors.hpp"

namespace tbl {

const char* errc_name(errc code) {
    switch (code) {
        case errc::invalid_graph: return "InvalidGraph";
        case errc::isolated_vertex: return "IsolatedVertex";
        case errc::disconnected: return "Disconnected";
        case errc::diameter_too_large: return "DiameterTooLarge";
        case errc::non_finite_metric: return "NonFiniteMetric";
        case errc::not_fully_supported: return "NotFullySupported";
        case errc::marginal_mismatch: return "MarginalMismatch";
        case errc::infeasible_dual: return "InfeasibleDual";
        case errc::collapsed_pair: return "CollapsedPair";
        case errc::bad_alpha: return "BadAlpha";
        case errc::bad_eta: return "BadEta";
        case errc::bad_params: return "BadParams";
        case errc::min_distance_below_one: return "MinDistanceBelowOne";
        case errc::negative_radicand: return "NegativeRadicand";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::empty_sample: return "EmptySample";
        case errc::invalid_measure: return "InvalidMeasure";
        case errc::invalid_spec: return "InvalidSpec";
    }
    return "UnknownError";
}

}  // namespace tbl
