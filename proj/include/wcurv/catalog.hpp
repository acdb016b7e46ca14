#pragma once

#include <wcurv/metric_file.hpp>

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcurv {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string document;  // metric file text
  // Coordinate box, at the default parameters, inside which every point is
  // regular and outside every exclusion; used for random sampling.
  std::array<std::pair<double, double>, kDim> sample_box;
};

const std::vector<CatalogEntry>& catalog();

// Throws InputError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);
MetricFile catalog_metric(std::string_view name);

}  // namespace wcurv
