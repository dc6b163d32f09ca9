#pragma once

#include "stancenet/corpus.hpp"
#include "stancenet/error.hpp"
#include "stancenet/eval.hpp"
#include "stancenet/pass1.hpp"
#include "stancenet/pipeline.hpp"
#include "stancenet/records.hpp"
#include "stancenet/resources.hpp"
#include "stancenet/sentence_classifier.hpp"
#include "stancenet/sentiment.hpp"
#include "stancenet/signed_network.hpp"
#include "stancenet/stance.hpp"
#include "stancenet/targets.hpp"
#include "stancenet/text.hpp"
