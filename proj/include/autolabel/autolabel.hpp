// Copyright 2026 The autolabel Authors.
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

// Umbrella header.

#ifndef AUTOLABEL_AUTOLABEL_HPP_
#define AUTOLABEL_AUTOLABEL_HPP_

#include "autolabel/corpus.hpp"
#include "autolabel/error.hpp"
#include "autolabel/eval.hpp"
#include "autolabel/fixture.hpp"
#include "autolabel/labels.hpp"
#include "autolabel/linkage.hpp"
#include "autolabel/ontoannot.hpp"
#include "autolabel/pipeline.hpp"
#include "autolabel/porter.hpp"
#include "autolabel/pubmed.hpp"
#include "autolabel/similarity.hpp"
#include "autolabel/textprep.hpp"
#include "autolabel/tune.hpp"
#include "autolabel/wordlists.hpp"
#include "autolabel/yake.hpp"

#endif  // AUTOLABEL_AUTOLABEL_HPP_
