// Copyright 2026 The Authors.
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

// Sequential access to an instance's elements. Streaming algorithms only
// see elements through Replay(); every call is one pass.

#ifndef FAIRMAT_STREAM_H_
#define FAIRMAT_STREAM_H_

#include <functional>
#include <span>
#include <vector>

#include "fairmat/core.h"

namespace fairmat {

class ElementStream {
 public:
  using Visitor = std::function<void(const Element&)>;

  virtual ~ElementStream() = default;

  // Feeds every element, in stream order, to `visit`.
  void Replay(const Visitor& visit) {
    ++passes_;
    Run(visit);
  }
  int passes() const { return passes_; }

 protected:
  virtual void Run(const Visitor& visit) = 0;

 private:
  int passes_ = 0;
};

// Replays an in-memory element sequence.
class VectorStream : public ElementStream {
 public:
  explicit VectorStream(std::span<const Element> elements)
      : elements_(elements) {}

 protected:
  void Run(const Visitor& visit) override {
    for (const Element& e : elements_) visit(e);
  }

 private:
  std::span<const Element> elements_;
};

}  // namespace fairmat

#endif  // FAIRMAT_STREAM_H_
