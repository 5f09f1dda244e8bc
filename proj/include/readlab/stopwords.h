// Copyright 2026 The readlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READLAB_STOPWORDS_H_
#define READLAB_STOPWORDS_H_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace readlab {

// Immutable set of lowercase stop-words tagged with a version string that is
// echoed into reports.
class StopwordSet {
 public:
  StopwordSet(const std::vector<std::string>& words, std::string version);

  // `word` must already be lowercased.
  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
  const std::string& version() const { return version_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::set<std::string, std::less<>> words_;
  std::string version_;
};

// The embedded 179-word English list.
const StopwordSet& default_stopwords();

// One word per line; blank lines and lines starting with '#' are skipped.
// Words are lowercased on load. Version is "file:<path>".
StopwordSet load_stopwords(const std::filesystem::path& path);

}  // namespace readlab

#endif  // READLAB_STOPWORDS_H_
