#pragma once

#include <set>
#include <string>

#include "peonto/concepts.hpp"
#include "peonto/ontology.hpp"

namespace peonto::test {

// Reference instance checker written as direct scans over the assertion
// store, sharing no evaluation machinery with KbIndex. Deliberately slow.
bool naive_instance(const KnowledgeBase& kb, const ClassHierarchy& hierarchy,
                    const Concept& c, const std::string& individual);

std::set<std::string> naive_extension(const KnowledgeBase& kb,
                                      const ClassHierarchy& hierarchy,
                                      const Concept& c);

}  // namespace peonto::test
