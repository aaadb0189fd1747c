#ifndef MINLOG_CATALOG_HPP
#define MINLOG_CATALOG_HPP

#include "minlog/formula.hpp"
#include "minlog/kripke.hpp"

#include <string>
#include <vector>

namespace minlog {

struct Principle {
  std::string key;     // stable CLI-addressable name
  std::string display; // human label
  std::string group;   // which equivalence cluster it reduces to
  Schema schema;
  std::vector<Schema> implicational_forms; // implication-only reading, per direction
  bool provable_in_minimal = false;        // derivable outright, no assumptions
  std::vector<std::string> aliases;
};

struct NamedModel {
  std::string key;
  std::string display;
  Structure structure;
  std::string notes;
};

// The principle inventory.  Keys "1".."18" follow the numbered list; PP and
// DGP alias "10" and "11".  The *imp entries are the implication-only forms.
const std::vector<Principle>& principles();

// The eleven reference structures, classification-table rows first.
const std::vector<NamedModel>& models();

const Principle* find_principle(std::string_view key); // key, alias or display; null when absent
const NamedModel* find_model(std::string_view key);

// Columns of the classification table, in table order.
const std::vector<std::string>& table_principle_keys();
// Rows of the classification table: every model except the long chain W5.
const std::vector<std::string>& table_model_keys();

} // namespace minlog

#endif
