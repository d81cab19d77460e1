#include "impbase/element_set.hpp"

#include <stdexcept>

namespace impbase {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64)
        throw std::invalid_argument("universe has " + std::to_string(labels_.size()) +
                                    " elements; at most 64 are supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw std::invalid_argument("universe labels must be non-empty");
        auto [_, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!fresh)
            throw std::invalid_argument("duplicate universe label '" + labels_[i] + "'");
    }
}

Universe Universe::numbered(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Universe(std::move(labels));
}

std::optional<int> Universe::index_of(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace impbase
