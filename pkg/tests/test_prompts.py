"""Golden checks: rendered prompts must match independent transcriptions of
the Polish instruction wording byte for byte."""

import pytest

from emobench import ALL_METRICS, BASIC_EMOTIONS
from emobench.errors import TemplateMissing
from emobench.fewshot.prompts import render_prompt
from emobench.fewshot.selection import Exemplar, ShotPlan

# Transcribed independently of the template files.
GOLDEN_BASIC = (
    'Na ile przedstawiony poniżej tekst manifestuje emocje "{emotion}". '
    "Odpowiedz używając 5 stopniowej skali, gdzie 1 - emocja wogóle nie "
    "występuje a 5 - emocja jest bardzo wyraźnie obecna. Odpowiadaj za "
    "pomocą pojedynczego numeru."
)
GOLDEN_VALENCE = (
    "Jaki znak emocji wyczytujesz w poniższym tekście? Odpowiedz używając "
    "5 stopniowej skali, gdzie 1 - obecna jest negatywna emocja a 5 - "
    "obecna jest pozytywna emocja. Odpowiadaj za pomocą pojedynczego numeru."
)
GOLDEN_AROUSAL = (
    "Jaki poziom pobudzenia wyczytujesz w poniższym tekście? Odpowiedz "
    "używając 5 stopniowej skali, gdzie 1 - brak pobudzenia a 5 - "
    "ekstremalne pobudzenie. Odpowiadaj za pomocą pojedynczego numeru."
)
GOLDEN_NAMES = {
    "happiness": "radość",
    "sadness": "smutek",
    "anger": "złość",
    "disgust": "wstręt",
    "fear": "strach",
    "pride": "duma",
}

EXEMPLARS = (
    Exemplar("e1", "Pierwszy przykład.", 1),
    Exemplar("e2", "Drugi przykład!", 4),
    Exemplar("e3", "Trzeci przykład?", 5),
)
TARGET = "Oceniany tekst."


def golden_instruction(metric):
    if metric in BASIC_EMOTIONS:
        return GOLDEN_BASIC.replace("{emotion}", GOLDEN_NAMES[metric])
    return GOLDEN_VALENCE if metric == "valence" else GOLDEN_AROUSAL


def golden_prompt(metric, k):
    parts = [golden_instruction(metric)]
    for i, ex in enumerate(EXEMPLARS[:k], start=1):
        parts.append(
            f'Tekst {i}: """{ex.clean_text}""" Twoja odpowiedź: '
            f'"""{ex.gold_score}""" ###'
        )
    parts.append(f'Tekst {k + 1}: """{TARGET}""" Twoja odpowiedź: ')
    return " ".join(parts)


@pytest.mark.parametrize("metric", ALL_METRICS)
@pytest.mark.parametrize("k", [0, 2, 3])
def test_rendered_matches_golden(metric, k):
    plan = ShotPlan(metric=metric, k=k, exemplars=EXEMPLARS[:k])
    rendered = render_prompt(metric, plan, TARGET)
    assert rendered.encode("utf-8") == golden_prompt(metric, k).encode("utf-8")


def test_zero_shot_has_no_separator():
    plan = ShotPlan(metric="happiness", k=0)
    assert "###" not in render_prompt("happiness", plan, TARGET)


def test_prompt_ends_with_answer_cue():
    for k in (0, 2):
        plan = ShotPlan(metric="valence", k=k, exemplars=EXEMPLARS[:k])
        assert render_prompt("valence", plan, TARGET).endswith("Twoja odpowiedź: ")


def test_rendering_is_deterministic():
    plan = ShotPlan(metric="anger", k=3, exemplars=EXEMPLARS)
    assert render_prompt("anger", plan, TARGET) == render_prompt("anger", plan, TARGET)


def test_unknown_metric_template():
    with pytest.raises(TemplateMissing):
        render_prompt("surprise", ShotPlan(metric="surprise", k=0), TARGET)
