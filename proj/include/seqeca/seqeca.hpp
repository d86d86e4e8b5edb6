#pragma once

#include "seqeca/classify.hpp"
#include "seqeca/configuration.hpp"
#include "seqeca/diagram.hpp"
#include "seqeca/dynamics.hpp"
#include "seqeca/mode.hpp"
#include "seqeca/parallel.hpp"
#include "seqeca/rule.hpp"
#include "seqeca/search.hpp"
#include "seqeca/serialize.hpp"
#include "seqeca/verify.hpp"
