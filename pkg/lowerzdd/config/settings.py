from importlib import import_module


class Settings:
    def __init__(self, module_name: str = "lowerzdd.config.settings_file"):
        module = import_module(module_name)
        for setting in dir(module):
            if setting.isupper():
                setting_value = getattr(module, setting)
                setattr(self, setting, setting_value)

    def resolve(self, config, name):
        """
        Returns `name` from the caller's config, falling back to the settings file.
        """
        if config and name in config:
            return config[name]
        return getattr(self, name)


settings = Settings()
