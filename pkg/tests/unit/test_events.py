"""
Tests for pipeline event logging.
"""

from unittest.mock import patch

from jung.events import MAX_DETAIL_ITEMS, PipelineEvent, log_event
from tests.conftest import build


class TestPipelineEvents:
    """Tests for event constants."""

    def test_input_events_defined(self):
        """Test input events are defined."""
        assert PipelineEvent.INPUT_LOADED == "input.loaded"
        assert PipelineEvent.INPUT_REJECTED == "input.rejected"

    def test_graph_events_defined(self):
        """Test curve graph events are defined."""
        assert PipelineEvent.GRAPH_VALIDATED == "graph.validated"
        assert PipelineEvent.GRAPH_NORMALIZED == "graph.normalized"
        assert PipelineEvent.GRAPH_ORDERED == "graph.ordered"
        assert PipelineEvent.GRAPH_REFINED == "graph.refined"

    def test_construction_events_defined(self):
        """Test construction and surface graph events are defined."""
        assert PipelineEvent.TOWER_BUILT == "tower.built"
        assert PipelineEvent.COMPLEX_BUILT == "complex.built"
        assert PipelineEvent.SGRAPH_BUILT == "sgraph.built"
        assert PipelineEvent.SGRAPH_MINIMIZED == "sgraph.minimized"

    def test_check_events_defined(self):
        """Test verification events are defined."""
        assert PipelineEvent.CHECK_PASSED == "check.passed"
        assert PipelineEvent.CHECK_FAILED == "check.failed"


class TestLogEvent:
    """Tests for log_event."""

    @patch("jung.events._event_logger")
    def test_success(self, mock_logger):
        """Test logging a successful stage."""
        log_event(PipelineEvent.TOWER_BUILT, graph="cusp", vertex="A2")

        mock_logger.info.assert_called_once()
        call_args = mock_logger.info.call_args
        assert call_args[0][0] == PipelineEvent.TOWER_BUILT
        assert call_args[1]["vertex"] == "A2"
        assert call_args[1]["success"] is True

    @patch("jung.events._event_logger")
    def test_failure(self, mock_logger):
        """Test logging a failed stage."""
        log_event(
            PipelineEvent.CHECK_FAILED,
            surface="A2/3",
            success=False,
            error="residual 4",
        )

        mock_logger.warning.assert_called_once()
        call_args = mock_logger.warning.call_args
        assert call_args[1]["success"] is False
        assert call_args[1]["error"] == "residual 4"
        assert call_args[1]["surface"] == "A2/3"

    @patch("jung.events._event_logger")
    def test_optional_fields_omitted(self, mock_logger):
        """Test unset fields are not logged."""
        log_event(PipelineEvent.SGRAPH_BUILT)

        kwargs = mock_logger.info.call_args[1]
        assert "graph" not in kwargs
        assert "details" not in kwargs

    @patch("jung.events._event_logger")
    def test_long_details_clipped(self, mock_logger):
        """Test long lists are shortened."""
        log_event(PipelineEvent.GRAPH_ORDERED, details={"order": list(range(25))})

        order = mock_logger.info.call_args[1]["details"]["order"]
        assert len(order) == MAX_DETAIL_ITEMS + 1
        assert order[-1] == "...[15 more]"

    @patch("jung.events._event_logger")
    def test_pipeline_emits_events(self, mock_logger, cusp_graph):
        """Test a build emits one event per stage."""
        build(cusp_graph)

        events = [c[0][0] for c in mock_logger.info.call_args_list]
        assert events.count(PipelineEvent.TOWER_BUILT) == 3
        assert events[-1] == PipelineEvent.COMPLEX_BUILT
