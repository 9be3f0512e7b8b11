#include "subseq/models.hpp"

#include <cstdio>

namespace subseq {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string describe(const IidModel<double>& model)
{
    std::string out = "iid(";
    for (std::size_t j = 0; j < model.probs().size(); ++j) {
        out += (j ? ";" : "") + num(model.probs()[j]);
    }
    return out + ")";
}

std::string describe(const MarkovModel<double>& model)
{
    return "markov(" + num(model.one_after_one()) + ";" + num(model.one_after_zero()) + ")";
}

std::string describe(const Model<double>& model)
{
    return std::visit([](const auto& m) { return describe(m); }, model);
}

} // namespace subseq
