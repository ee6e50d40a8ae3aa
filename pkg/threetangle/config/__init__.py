from threetangle.config.utils import ToolkitSettings, get_settings

__all__ = ["ToolkitSettings", "get_settings"]
