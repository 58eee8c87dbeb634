#pragma once

#include "bounds.hpp"
#include "campaign.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "lee/oracle.hpp"
#include "notation.hpp"
#include "report_json.hpp"
#include "seifert.hpp"
